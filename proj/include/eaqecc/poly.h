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

#ifndef EAQECC_POLY_H
#define EAQECC_POLY_H

#include <cstdint>
#include <string>
#include <vector>

#include "eaqecc/field.h"

namespace eaqecc {

/// Dense univariate polynomial over a Field; coefficients ascending, packed.
/// The zero polynomial has no coefficients.
class Poly {
  public:
    explicit Poly(FieldPtr field, std::vector<std::uint64_t> coeffs = {});

    static Poly constant(FieldPtr field, std::uint64_t c);
    /// x^n - c
    static Poly binomial(FieldPtr field, std::size_t n, std::uint64_t c);

    const FieldPtr& field() const {
        return field_;
    }
    const std::vector<std::uint64_t>& coefficients() const {
        return coeffs_;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    /// -1 for the zero polynomial.
    long degree() const {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    std::uint64_t coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    bool is_monic() const {
        return !coeffs_.empty() && coeffs_.back() == 1;
    }

    std::uint64_t evaluate(std::uint64_t x) const;
    Felt evaluate(const Felt& x) const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;

    struct DivMod;
    DivMod divmod(const Poly& divisor) const;

    bool operator==(const Poly& other) const;

    /// `GF(order)[c_0,c_1,...]`, ascending degree.
    std::string to_string() const;

  private:
    void normalize();

    FieldPtr field_;
    std::vector<std::uint64_t> coeffs_;
};

struct Poly::DivMod {
    Poly quotient;
    Poly remainder;
};

/// prod_j (x - a^(s^j)) over the orbit of a under x -> x^s, where s is the
/// order of a subfield. Throws if s is not a subfield order or if a coefficient
/// falls outside GF(s).
Poly minimal_polynomial(const FieldPtr& field, const Felt& a, std::uint64_t subfield_order);

}  // namespace eaqecc

#endif  // EAQECC_POLY_H
