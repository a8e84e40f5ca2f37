// Copyright 2026 The eaqecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eaqecc/field.h"

#include <array>
#include <sstream>
#include <stdexcept>

#include "eaqecc/number_theory.h"

namespace eaqecc {

namespace {

constexpr unsigned kMaxDigits = 64;
using Digits = std::array<std::uint64_t, 2 * kMaxDigits>;

void unpack(std::uint64_t v, std::uint64_t p, unsigned m, std::uint64_t* out) {
    for (unsigned i = 0; i < m; ++i) {
        out[i] = v % p;
        v /= p;
    }
}

std::uint64_t pack(const std::uint64_t* digits, std::uint64_t p, unsigned m) {
    std::uint64_t v = 0;
    for (unsigned i = m; i-- > 0;) {
        v = v * p + digits[i];
    }
    return v;
}

// Dense polynomials over GF(p), ascending, used only by the irreducibility test.
using PrimePoly = std::vector<std::uint64_t>;

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

PrimePoly poly_rem(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
    trim(a);
    std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        std::uint64_t factor = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - mul_mod(factor, b[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

PolyRing::PolyRing(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (modulus_.size() != m_ + 1 || modulus_.back() != 1) {
        throw std::invalid_argument("PolyRing: modulus must be monic of degree m");
    }
    if (m_ > kMaxDigits) {
        throw std::invalid_argument("PolyRing: degree too large");
    }
    if (p_ == 2) {
        for (unsigned i = 0; i < m_; ++i) {
            reduction_mask_ |= modulus_[i] << i;
        }
    }
    // x mod f: for m = 1 the class of x is the constant -c_0.
    x_ = m_ == 1 ? (p_ - modulus_[0]) % p_ : p_;
}

std::uint64_t PolyRing::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) {
        return a ^ b;
    }
    std::uint64_t out = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = (a % p_ + b % p_) % p_;
        out += d * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint64_t PolyRing::neg(std::uint64_t a) const {
    if (p_ == 2) {
        return a;
    }
    std::uint64_t out = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = a % p_;
        out += ((p_ - d) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

std::uint64_t PolyRing::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t PolyRing::scale(std::uint64_t a, std::uint64_t s) const {
    s %= p_;
    if (p_ == 2) {
        return s ? a : 0;
    }
    std::uint64_t out = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += mul_mod(a % p_, s, p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

std::uint64_t PolyRing::mul(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) {
        unsigned __int128 prod = 0;
        for (unsigned i = 0; b >> i; ++i) {
            if ((b >> i) & 1) {
                prod ^= static_cast<unsigned __int128>(a) << i;
            }
        }
        for (unsigned i = 2 * m_; i-- > m_;) {
            if ((prod >> i) & 1) {
                prod ^= static_cast<unsigned __int128>(1) << i;
                prod ^= static_cast<unsigned __int128>(reduction_mask_) << (i - m_);
            }
        }
        return static_cast<std::uint64_t>(prod);
    }
    Digits da{}, db{}, prod{};
    unpack(a, p_, m_, da.data());
    unpack(b, p_, m_, db.data());
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + mul_mod(da[i], db[j], p_)) % p_;
        }
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
        std::uint64_t lead = prod[i];
        if (lead == 0) {
            continue;
        }
        prod[i] = 0;
        for (unsigned j = 0; j < m_; ++j) {
            std::uint64_t t = mul_mod(lead, modulus_[j], p_);
            prod[i - m_ + j] = (prod[i - m_ + j] + p_ - t) % p_;
        }
    }
    return pack(prod.data(), p_, m_);
}

std::uint64_t PolyRing::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic) {
    if (monic.size() < 2 || monic.back() != 1) {
        throw std::invalid_argument("is_irreducible: polynomial must be monic of positive degree");
    }
    unsigned m = static_cast<unsigned>(monic.size() - 1);
    if (m == 1) {
        return true;
    }
    PolyRing ring(p, m, std::vector<std::uint64_t>(monic.begin(), monic.end()));
    // frob[k] = x^(p^k) mod f
    std::vector<std::uint64_t> frob{ring.x()};
    for (unsigned k = 1; k <= m; ++k) {
        frob.push_back(ring.pow(frob.back(), p));
    }
    if (frob[m] != ring.x()) {
        return false;
    }
    PrimePoly f(monic.begin(), monic.end());
    for (std::uint64_t ell : prime_factors(m)) {
        PrimePoly h(m);
        unpack(ring.sub(frob[m / ell], ring.x()), p, m, h.data());
        if (poly_gcd(h, f, p).size() != 1) {
            return false;
        }
    }
    return true;
}

Field::Field(std::uint64_t p, unsigned m, std::uint64_t order, std::vector<std::uint64_t> modulus,
             std::uint64_t generator, std::vector<std::uint64_t> group_primes)
    : p_(p),
      m_(m),
      order_(order),
      modulus_(modulus),
      ring_(p, m, std::move(modulus)),
      generator_(generator),
      group_primes_(std::move(group_primes)) {
    if (order_ <= kTableLimit) {
        std::uint64_t n = order_ - 1;
        log_.assign(order_, 0);
        exp_.assign(2 * n, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            exp_[i] = exp_[i + n] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = ring_.mul(cur, generator_);
        }
    }
}

std::shared_ptr<const Field> Field::make(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) {
        throw std::invalid_argument("make_field: characteristic " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw std::invalid_argument("make_field: extension degree must be positive");
    }
    auto order = checked_pow(p, m);
    if (!order || m > kMaxDigits) {
        throw std::overflow_error("make_field: p^m does not fit in 64 bits");
    }
    std::uint64_t group = *order - 1;
    std::vector<std::uint64_t> primes = group > 1 ? prime_factors(group) : std::vector<std::uint64_t>{};

    auto full_order = [&](const PolyRing& ring, std::uint64_t a) {
        if (a == 0 || ring.pow(a, group) != 1) {
            return false;
        }
        for (std::uint64_t ell : primes) {
            if (ring.pow(a, group / ell) == 1) {
                return false;
            }
        }
        return true;
    };

    // Monic candidates in lexicographic order of (c_{m-1}, ..., c_0), which is
    // the numeric order of the packed lower coefficients.
    std::vector<std::uint64_t> modulus(m + 1);
    modulus[m] = 1;
    std::vector<std::uint64_t> first_irreducible;
    for (std::uint64_t lower = 0; lower < *order; ++lower) {
        unpack(lower, p, m, modulus.data());
        if (modulus[0] == 0) {
            continue;
        }
        PolyRing ring(p, m, modulus);
        if (full_order(ring, ring.x())) {
            if (!is_irreducible(p, modulus)) {
                throw std::logic_error("make_field: primitive root of a reducible modulus");
            }
            return std::shared_ptr<const Field>(new Field(p, m, *order, modulus, ring.x(), primes));
        }
        if (first_irreducible.empty() && is_irreducible(p, modulus)) {
            first_irreducible = modulus;
        }
    }
    // Not reachable in practice: primitive polynomials exist in every degree.
    if (first_irreducible.empty()) {
        throw std::logic_error("make_field: no irreducible modulus found");
    }
    PolyRing ring(p, m, first_irreducible);
    for (std::uint64_t g = 1; g < *order; ++g) {
        if (full_order(ring, g)) {
            return std::shared_ptr<const Field>(new Field(p, m, *order, first_irreducible, g, primes));
        }
    }
    throw std::logic_error("make_field: no primitive element found");
}

void Field::check(const Felt& a) const {
    if (a.field_order() != order_) {
        throw std::invalid_argument("field operand belongs to GF(" + std::to_string(a.field_order()) +
                                    "), expected GF(" + std::to_string(order_) + ")");
    }
}

Felt Field::element(std::uint64_t packed) const {
    if (packed >= order_) {
        throw std::out_of_range("element: packed value " + std::to_string(packed) + " outside GF(" +
                                std::to_string(order_) + ")");
    }
    return wrap(packed);
}

Felt Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > m_) {
        throw std::invalid_argument("from_coefficients: more than m coefficients");
    }
    Digits d{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_) {
            throw std::invalid_argument("from_coefficients: coefficient not reduced mod p");
        }
        d[i] = coeffs[i];
    }
    return wrap(pack(d.data(), p_, m_));
}

std::vector<std::uint64_t> Field::coefficients(const Felt& a) const {
    check(a);
    std::vector<std::uint64_t> out(m_);
    unpack(a.value(), p_, m_, out.data());
    return out;
}

Felt Field::add(const Felt& a, const Felt& b) const {
    check(a);
    check(b);
    return wrap(add_raw(a.value(), b.value()));
}

Felt Field::sub(const Felt& a, const Felt& b) const {
    check(a);
    check(b);
    return wrap(sub_raw(a.value(), b.value()));
}

Felt Field::neg(const Felt& a) const {
    check(a);
    return wrap(ring_.neg(a.value()));
}

Felt Field::mul(const Felt& a, const Felt& b) const {
    check(a);
    check(b);
    return wrap(mul_raw(a.value(), b.value()));
}

Felt Field::inverse(const Felt& a) const {
    check(a);
    if (a.is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return wrap(inv_raw(a.value()));
}

Felt Field::div(const Felt& a, const Felt& b) const {
    check(a);
    check(b);
    if (b.is_zero()) {
        throw std::domain_error("division by zero");
    }
    return wrap(mul_raw(a.value(), inv_raw(b.value())));
}

Felt Field::pow(const Felt& a, std::uint64_t e) const {
    check(a);
    return wrap(pow_raw(a.value(), e));
}

std::uint64_t Field::inv_raw(std::uint64_t a) const {
    std::uint64_t n = order_ - 1;
    if (!log_.empty()) {
        return exp_[(n - log_[a]) % n];
    }
    return ring_.pow(a, n - 1);
}

std::uint64_t Field::pow_raw(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) {
        return e == 0 ? 1 : 0;
    }
    if (!log_.empty()) {
        std::uint64_t n = order_ - 1;
        return exp_[mul_mod(log_[a], e % n, n)];
    }
    return ring_.pow(a, e);
}

Felt Field::frobenius(const Felt& a, std::uint64_t s) const {
    check(a);
    std::uint64_t t = s;
    while (t > 1 && t % p_ == 0) {
        t /= p_;
    }
    if (s < p_ || t != 1) {
        throw std::invalid_argument("frobenius: " + std::to_string(s) + " is not a power of " +
                                    std::to_string(p_));
    }
    return wrap(pow_raw(a.value(), s));
}

Felt Field::root_of_unity(std::uint64_t n) const {
    if (n == 0 || (order_ - 1) % n != 0) {
        throw std::invalid_argument("root_of_unity: " + std::to_string(n) + " does not divide " +
                                    std::to_string(order_ - 1));
    }
    return wrap(pow_raw(generator_, (order_ - 1) / n));
}

std::uint64_t Field::multiplicative_order(const Felt& a) const {
    check(a);
    if (a.is_zero()) {
        throw std::domain_error("multiplicative_order of zero");
    }
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t ell : group_primes_) {
        while (ord % ell == 0 && pow_raw(a.value(), ord / ell) == 1) {
            ord /= ell;
        }
    }
    return ord;
}

std::string Field::to_string() const {
    std::ostringstream out;
    out << "GF(" << p_ << "^" << m_ << "; modulus=[";
    for (unsigned i = m_ + 1; i-- > 0;) {
        out << modulus_[i] << (i ? "," : "");
    }
    out << "]; g=" << generator_ << ")";
    return out.str();
}

}  // namespace eaqecc
