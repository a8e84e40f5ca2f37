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

#ifndef EAQECC_TOWER_H
#define EAQECC_TOWER_H

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eaqecc/field.h"
#include "eaqecc/poly.h"

namespace eaqecc {

/// GF(q^2) and GF(q^4) with a fixed embedding of the former into the latter.
///
/// The embedding sends the root x of the GF(q^2) modulus to the first power of
/// the GF(q^4) generator, among those of order q^2 - 1, that is a root of the
/// same modulus. Every element z of GF(q^4) has unique coordinates (a, b) over
/// GF(q^2) with z = a + b*beta, where beta is the GF(q^4) generator.
class Tower {
  public:
    explicit Tower(std::uint64_t q);

    std::uint64_t q() const {
        return q_;
    }
    const FieldPtr& small() const {
        return small_;
    }
    const FieldPtr& big() const {
        return big_;
    }
    Felt beta() const {
        return big_->generator();
    }

    Felt embed(const Felt& a) const;
    std::optional<Felt> project(const Felt& z) const;

    std::uint64_t embed_raw(std::uint64_t a) const {
        return image_[a];
    }
    /// Throws std::domain_error when z is not in the embedded subfield.
    std::uint64_t project_raw(std::uint64_t z) const;

    std::pair<Felt, Felt> coordinates(const Felt& z) const;
    /// Coordinates of z given z^(q^2), avoiding the exponentiation.
    std::pair<std::uint64_t, std::uint64_t> coordinates_raw(std::uint64_t z, std::uint64_t z_frob) const;

    /// Maps a polynomial whose coefficients lie in the embedded GF(q^2) down to GF(q^2).
    Poly project(const Poly& poly) const;

  private:
    std::uint64_t q_;
    FieldPtr small_;
    FieldPtr big_;
    std::vector<std::uint64_t> image_;
    std::unordered_map<std::uint64_t, std::uint64_t> preimage_;
    std::uint64_t beta_;
    std::uint64_t beta_diff_inv_;  // 1 / (beta - beta^(q^2))
};

}  // namespace eaqecc

#endif  // EAQECC_TOWER_H
