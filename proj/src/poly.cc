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

#include "eaqecc/poly.h"

#include <sstream>
#include <stdexcept>

namespace eaqecc {

Poly::Poly(FieldPtr field, std::vector<std::uint64_t> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (c >= field_->order()) {
            throw std::out_of_range("Poly: coefficient outside the field");
        }
    }
    normalize();
}

Poly Poly::constant(FieldPtr field, std::uint64_t c) {
    return Poly(std::move(field), {c});
}

Poly Poly::binomial(FieldPtr field, std::size_t n, std::uint64_t c) {
    std::vector<std::uint64_t> coeffs(n + 1, 0);
    coeffs[0] = field->neg(field->element(c)).value();
    coeffs[n] = 1;
    return Poly(std::move(field), std::move(coeffs));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::uint64_t Poly::evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_->add_raw(field_->mul_raw(acc, x), coeffs_[i]);
    }
    return acc;
}

Felt Poly::evaluate(const Felt& x) const {
    if (!field_->contains(x)) {
        throw std::invalid_argument("Poly::evaluate: point from a different field");
    }
    return field_->element(evaluate(x.value()));
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<std::uint64_t> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = field_->add_raw(coefficient(i), other.coefficient(i));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
    std::vector<std::uint64_t> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = field_->sub_raw(coefficient(i), other.coefficient(i));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) {
        return Poly(field_);
    }
    std::vector<std::uint64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] = field_->add_raw(out[i + j], field_->mul_raw(coeffs_[i], other.coeffs_[j]));
        }
    }
    return Poly(field_, std::move(out));
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("Poly::divmod: division by the zero polynomial");
    }
    std::vector<std::uint64_t> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size()) {
        return {Poly(field_), *this};
    }
    std::vector<std::uint64_t> quot(rem.size() - d.size() + 1, 0);
    std::uint64_t lead_inv = field_->inv_raw(d.back());
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        std::uint64_t factor = field_->mul_raw(rem[shift + d.size() - 1], lead_inv);
        quot[shift] = factor;
        if (factor == 0) {
            continue;
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            rem[shift + i] = field_->sub_raw(rem[shift + i], field_->mul_raw(factor, d[i]));
        }
    }
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

bool Poly::operator==(const Poly& other) const {
    return field_->order() == other.field_->order() && coeffs_ == other.coeffs_;
}

std::string Poly::to_string() const {
    std::ostringstream out;
    out << "GF(" << field_->order() << ")[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out << (i ? "," : "") << coeffs_[i];
    }
    out << "]";
    return out.str();
}

Poly minimal_polynomial(const FieldPtr& field, const Felt& a, std::uint64_t subfield_order) {
    if (!field->contains(a)) {
        throw std::invalid_argument("minimal_polynomial: element from a different field");
    }
    // GF(s) embeds in GF(p^m) iff s = p^k with k | m.
    std::uint64_t p = field->characteristic();
    unsigned k = 0;
    std::uint64_t t = subfield_order;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1 || k == 0 || field->degree() % k != 0) {
        throw std::invalid_argument("minimal_polynomial: " + std::to_string(subfield_order) +
                                    " is not the order of a subfield of GF(" + std::to_string(field->order()) +
                                    ")");
    }
    Poly result = Poly::constant(field, 1);
    Felt conj = a;
    do {
        result = result * Poly(field, {field->neg(conj).value(), 1});
        conj = field->pow(conj, subfield_order);
    } while (conj != a);
    for (auto c : result.coefficients()) {
        if (field->pow_raw(c, subfield_order) != c) {
            throw std::logic_error("minimal_polynomial: coefficient outside the subfield");
        }
    }
    return result;
}

}  // namespace eaqecc
