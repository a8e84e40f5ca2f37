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

#include "eaqecc/cosets.h"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eaqecc/number_theory.h"

namespace eaqecc {

ExponentSet::ExponentSet(std::initializer_list<std::uint64_t> values)
    : ExponentSet(std::vector<std::uint64_t>(values)) {}

ExponentSet::ExponentSet(std::vector<std::uint64_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool ExponentSet::contains(std::uint64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

ExponentSet ExponentSet::operator|(const ExponentSet& other) const {
    ExponentSet out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.values_));
    return out;
}

ExponentSet ExponentSet::operator&(const ExponentSet& other) const {
    ExponentSet out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.values_));
    return out;
}

ExponentSet ExponentSet::operator-(const ExponentSet& other) const {
    ExponentSet out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.values_));
    return out;
}

std::string ExponentSet::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out << (i ? "," : "") << values_[i];
    }
    out << "]";
    return out.str();
}

CodeFrame CodeFrame::general(std::uint64_t q, std::uint64_t n, std::uint64_t ord_lambda) {
    auto pp = as_prime_power(q);
    if (!pp) {
        throw std::invalid_argument("q must be a prime power (got " + std::to_string(q) + ")");
    }
    if (n == 0 || std::gcd(n, q) != 1) {
        throw std::invalid_argument("gcd(n, q) must be 1");
    }
    std::uint64_t q2 = 0;
    std::uint64_t rn = 0;
    if (__builtin_mul_overflow(q, q, &q2) || __builtin_mul_overflow(n, ord_lambda, &rn)) {
        throw std::overflow_error("frame parameters overflow 64 bits");
    }
    if (ord_lambda == 0 || (q2 - 1) % ord_lambda != 0) {
        throw std::invalid_argument("order of lambda must divide q^2 - 1");
    }
    CodeFrame f;
    f.q_ = q;
    f.p_ = pp->prime;
    f.e_ = pp->exponent;
    f.n_ = n;
    f.ord_ = ord_lambda;
    f.rn_ = rn;
    return f;
}

CodeFrame CodeFrame::for_q(std::uint64_t q) {
    if (!as_prime_power(q)) {
        throw std::invalid_argument("q must be a prime power (got " + std::to_string(q) + ")");
    }
    if (q > (std::uint64_t{1} << 20)) {
        throw std::overflow_error("q too large for 64-bit exponent arithmetic");
    }
    if ((q * q + 1) % 5 != 0) {
        throw std::invalid_argument("q^2 + 1 must be divisible by 5 (got q = " + std::to_string(q) + ")");
    }
    std::uint64_t n = (q * q + 1) / 5;
    CodeFrame f = general(q, n, q + 1);
    std::uint64_t s = q % 2 == 0 ? (q + 6) * n / 2 : (q * q + 1) / 2;
    if (f.in_omega(s)) {
        f.s_ = s;
    }
    if (q % 2 == 0) {
        std::uint64_t r = (q * q - q) / 2;
        if (f.in_omega(r)) {
            f.r_start_ = r;
        }
    }
    return f;
}

std::uint64_t CodeFrame::reduce(std::int64_t i) const {
    return reduce_mod(i, rn_);
}

std::vector<std::uint64_t> omega(const CodeFrame& frame) {
    std::vector<std::uint64_t> out(frame.n());
    for (std::uint64_t j = 0; j < frame.n(); ++j) {
        out[j] = (1 + j * frame.ord_lambda()) % frame.rn();
    }
    return out;
}

Coset coset_of(std::uint64_t i, const CodeFrame& frame) {
    if (!frame.in_omega(i)) {
        throw std::invalid_argument("exponent " + std::to_string(i) + " is not in omega");
    }
    const std::uint64_t q2 = frame.q() * frame.q() % frame.rn();
    Coset c;
    std::uint64_t x = i;
    do {
        c.elements.push_back(x);
        x = mul_mod(x, q2, frame.rn());
    } while (x != i);
    std::sort(c.elements.begin(), c.elements.end());
    c.representative = c.elements.front();
    return c;
}

std::vector<Coset> partition(const CodeFrame& frame) {
    std::vector<char> seen(frame.n(), 0);
    std::vector<Coset> out;
    for (std::uint64_t i : omega(frame)) {
        if (seen[frame.omega_index(i)]) {
            continue;
        }
        Coset c = coset_of(i, frame);
        for (auto x : c.elements) {
            seen[frame.omega_index(x)] = 1;
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) {
        return a.representative < b.representative;
    });
    return out;
}

ExponentSet coset_union(std::span<const std::int64_t> indices, const CodeFrame& frame) {
    std::vector<std::uint64_t> all;
    for (auto i : indices) {
        auto c = coset_of(frame.reduce(i), frame);
        all.insert(all.end(), c.elements.begin(), c.elements.end());
    }
    return ExponentSet(std::move(all));
}

bool is_coset_closed(const ExponentSet& z, const CodeFrame& frame) {
    const std::uint64_t q2 = frame.q() * frame.q() % frame.rn();
    for (auto x : z) {
        if (!z.contains(mul_mod(x, q2, frame.rn()))) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> coset_representatives(const ExponentSet& z, const CodeFrame& frame) {
    std::vector<std::uint64_t> reps;
    for (auto x : z) {
        reps.push_back(coset_of(x, frame).representative);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

namespace {

void require_subset_of_omega(const ExponentSet& s, const CodeFrame& frame) {
    for (auto x : s) {
        if (!frame.in_omega(x)) {
            throw std::invalid_argument("exponent " + std::to_string(x) + " is not in omega");
        }
    }
}

}  // namespace

ExponentSet neg_q_image(const ExponentSet& s, const CodeFrame& frame) {
    require_subset_of_omega(s, frame);
    const std::uint64_t rn = frame.rn();
    const std::uint64_t neg_q = (rn - frame.q() % rn) % rn;
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (auto x : s) {
        std::uint64_t y = mul_mod(x, neg_q, rn);
        if (!frame.in_omega(y)) {
            throw std::logic_error("-q maps " + std::to_string(x) + " outside omega; frame is inconsistent");
        }
        out.push_back(y);
    }
    return ExponentSet(std::move(out));
}

DefiningSetDecomposition decompose(const ExponentSet& z, const CodeFrame& frame) {
    DefiningSetDecomposition d;
    d.z = z;
    d.z1 = z & neg_q_image(z, frame);
    d.z2 = z - d.z1;
    d.c = d.z1.size();
    d.coset_closed = is_coset_closed(z, frame);
    return d;
}

bool dual_containing(const ExponentSet& z, const CodeFrame& frame) {
    return decompose(z, frame).c == 0;
}

std::uint64_t consecutive_run(const ExponentSet& z, const CodeFrame& frame) {
    require_subset_of_omega(z, frame);
    const std::uint64_t n = frame.n();
    if (z.size() == n) {
        return n;
    }
    std::vector<char> present(n, 0);
    for (auto x : z) {
        present[frame.omega_index(x)] = 1;
    }
    // Walk twice around so runs that wrap past j = n-1 are counted whole.
    std::uint64_t best = 0, run = 0;
    for (std::uint64_t k = 0; k < 2 * n; ++k) {
        run = present[k % n] ? run + 1 : 0;
        best = std::max(best, run);
    }
    return std::min(best, n);
}

}  // namespace eaqecc
