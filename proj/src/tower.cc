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

#include "eaqecc/tower.h"

#include <stdexcept>

#include "eaqecc/number_theory.h"

namespace eaqecc {

Tower::Tower(std::uint64_t q) : q_(q) {
    auto pp = as_prime_power(q);
    if (!pp) {
        throw std::invalid_argument("q must be a prime power (got " + std::to_string(q) + ")");
    }
    small_ = Field::make(pp->prime, 2 * pp->exponent);
    big_ = Field::make(pp->prime, 4 * pp->exponent);

    const std::uint64_t q2 = small_->order();
    const auto& modulus = small_->modulus();
    auto is_root = [&](std::uint64_t z) {
        std::uint64_t acc = 0;
        for (std::size_t i = modulus.size(); i-- > 0;) {
            acc = big_->add_raw(big_->mul_raw(acc, z), modulus[i]);
        }
        return acc == 0;
    };
    const std::uint64_t gamma = big_->pow_raw(big_->generator().value(), q2 + 1);
    std::uint64_t rho = 0;
    std::uint64_t cur = gamma;
    for (std::uint64_t k = 1; k < q2; ++k, cur = big_->mul_raw(cur, gamma)) {
        if (is_root(cur)) {
            rho = cur;
            break;
        }
    }
    if (rho == 0) {
        throw std::logic_error("Tower: GF(q^2) modulus has no root in GF(q^4)");
    }

    const unsigned m2 = small_->degree();
    std::vector<std::uint64_t> rho_powers(m2);
    rho_powers[0] = 1;
    for (unsigned i = 1; i < m2; ++i) {
        rho_powers[i] = big_->mul_raw(rho_powers[i - 1], rho);
    }
    image_.resize(q2);
    preimage_.reserve(q2);
    for (std::uint64_t a = 0; a < q2; ++a) {
        auto digits = small_->coefficients(small_->element(a));
        std::uint64_t z = 0;
        for (unsigned i = 0; i < m2; ++i) {
            if (digits[i] != 0) {
                z = big_->add_raw(z, big_->mul_raw(digits[i], rho_powers[i]));
            }
        }
        image_[a] = z;
        preimage_.emplace(z, a);
    }
    if (preimage_.size() != q2) {
        throw std::logic_error("Tower: embedding is not injective");
    }

    beta_ = big_->generator().value();
    std::uint64_t beta_frob = big_->pow_raw(beta_, q2);
    beta_diff_inv_ = big_->inv_raw(big_->sub_raw(beta_, beta_frob));
}

Felt Tower::embed(const Felt& a) const {
    if (!small_->contains(a)) {
        throw std::invalid_argument("embed: element is not in GF(q^2)");
    }
    return big_->element(image_[a.value()]);
}

std::optional<Felt> Tower::project(const Felt& z) const {
    if (!big_->contains(z)) {
        throw std::invalid_argument("project: element is not in GF(q^4)");
    }
    auto it = preimage_.find(z.value());
    if (it == preimage_.end()) {
        return std::nullopt;
    }
    return small_->element(it->second);
}

std::uint64_t Tower::project_raw(std::uint64_t z) const {
    auto it = preimage_.find(z);
    if (it == preimage_.end()) {
        throw std::domain_error("project: element is not in the GF(q^2) subfield");
    }
    return it->second;
}

std::pair<std::uint64_t, std::uint64_t> Tower::coordinates_raw(std::uint64_t z, std::uint64_t z_frob) const {
    // z = a + b*beta and z^(q^2) = a + b*beta^(q^2).
    std::uint64_t b = big_->mul_raw(big_->sub_raw(z, z_frob), beta_diff_inv_);
    std::uint64_t a = big_->sub_raw(z, big_->mul_raw(b, beta_));
    return {project_raw(a), project_raw(b)};
}

std::pair<Felt, Felt> Tower::coordinates(const Felt& z) const {
    if (!big_->contains(z)) {
        throw std::invalid_argument("coordinates: element is not in GF(q^4)");
    }
    auto [a, b] = coordinates_raw(z.value(), big_->pow_raw(z.value(), small_->order()));
    return {small_->element(a), small_->element(b)};
}

Poly Tower::project(const Poly& poly) const {
    if (poly.field()->order() != big_->order()) {
        throw std::invalid_argument("project: polynomial is not over GF(q^4)");
    }
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(poly.coefficients().size());
    for (auto c : poly.coefficients()) {
        coeffs.push_back(project_raw(c));
    }
    return Poly(small_, std::move(coeffs));
}

}  // namespace eaqecc
