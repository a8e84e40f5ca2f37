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

#ifndef EAQECC_FIELD_H
#define EAQECC_FIELD_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace eaqecc {

class Field;

/// An element of GF(p^m) in polynomial basis. The coefficient vector is packed
/// into one integer as sum(c_i * p^i), which for p = 2 is plain bit packing.
/// Each element remembers the order of its field so that mixing operands from
/// different fields is caught.
class Felt {
  public:
    Felt() = default;

    std::uint64_t value() const {
        return value_;
    }
    std::uint64_t field_order() const {
        return tag_;
    }
    bool is_zero() const {
        return value_ == 0;
    }

    bool operator==(const Felt&) const = default;

  private:
    friend class Field;
    Felt(std::uint64_t value, std::uint64_t tag) : value_(value), tag_(tag) {}

    std::uint64_t value_ = 0;
    std::uint64_t tag_ = 0;
};

/// Arithmetic in GF(p) with modulus polynomial f over GF(p) of degree m. Values
/// are packed coefficient vectors, see Felt.
class PolyRing {
  public:
    PolyRing(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t scale(std::uint64_t a, std::uint64_t s) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// The class of x modulo f.
    std::uint64_t x() const {
        return x_;
    }

  private:
    std::uint64_t p_;
    unsigned m_;
    std::vector<std::uint64_t> modulus_;  // ascending, monic, length m + 1
    std::uint64_t reduction_mask_ = 0;     // p = 2: f without its leading bit
    std::uint64_t x_ = 0;
};

/// A finite field GF(p^m) with a deterministic modulus and primitive element.
/// Immutable after construction and safe to share between threads.
class Field {
  public:
    /// Builds GF(p^m). The modulus is the lexicographically smallest monic
    /// irreducible polynomial whose root is primitive; the primitive element
    /// is that root.
    static std::shared_ptr<const Field> make(std::uint64_t p, unsigned m);

    std::uint64_t characteristic() const {
        return p_;
    }
    unsigned degree() const {
        return m_;
    }
    std::uint64_t order() const {
        return order_;
    }
    /// Modulus coefficients, ascending (c_0 .. c_m).
    const std::vector<std::uint64_t>& modulus() const {
        return modulus_;
    }
    Felt generator() const {
        return wrap(generator_);
    }

    Felt zero() const {
        return wrap(0);
    }
    Felt one() const {
        return wrap(1);
    }
    Felt element(std::uint64_t packed) const;
    Felt from_coefficients(std::span<const std::uint64_t> coeffs) const;
    std::vector<std::uint64_t> coefficients(const Felt& a) const;
    bool contains(const Felt& a) const {
        return a.field_order() == order_;
    }

    Felt add(const Felt& a, const Felt& b) const;
    Felt sub(const Felt& a, const Felt& b) const;
    Felt neg(const Felt& a) const;
    Felt mul(const Felt& a, const Felt& b) const;
    Felt div(const Felt& a, const Felt& b) const;
    Felt inverse(const Felt& a) const;
    Felt pow(const Felt& a, std::uint64_t e) const;

    /// a^s for s a power of the characteristic.
    Felt frobenius(const Felt& a, std::uint64_t s) const;

    /// g^((p^m - 1) / N); requires N | p^m - 1.
    Felt root_of_unity(std::uint64_t n) const;

    std::uint64_t multiplicative_order(const Felt& a) const;

    /// Distinct primes dividing p^m - 1.
    const std::vector<std::uint64_t>& group_order_primes() const {
        return group_primes_;
    }

    /// `GF(p^m; modulus=[c_m..c_0]; g=index)`
    std::string to_string() const;

    // Unchecked operations on packed values for inner loops.
    std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const {
        return p_ == 2 ? (a ^ b) : ring_.add(a, b);
    }
    std::uint64_t sub_raw(std::uint64_t a, std::uint64_t b) const {
        return p_ == 2 ? (a ^ b) : ring_.sub(a, b);
    }
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
        if (!log_.empty()) {
            if (a == 0 || b == 0) {
                return 0;
            }
            return exp_[log_[a] + log_[b]];
        }
        return ring_.mul(a, b);
    }
    std::uint64_t inv_raw(std::uint64_t a) const;
    std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const;

    /// Log/antilog tables; empty for fields above kTableLimit. The antilog
    /// table is doubled so log a + log b indexes it without reduction.
    std::span<const std::uint32_t> log_table() const {
        return log_;
    }
    std::span<const std::uint32_t> exp_table() const {
        return exp_;
    }

    /// Discrete log tables exist for fields up to this many elements.
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  private:
    Field(std::uint64_t p, unsigned m, std::uint64_t order, std::vector<std::uint64_t> modulus,
          std::uint64_t generator, std::vector<std::uint64_t> group_primes);

    Felt wrap(std::uint64_t v) const {
        return Felt(v, order_);
    }
    void check(const Felt& a) const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t order_;
    std::vector<std::uint64_t> modulus_;
    PolyRing ring_;
    std::uint64_t generator_;
    std::vector<std::uint64_t> group_primes_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Rabin's irreducibility test for a monic polynomial over GF(p), ascending coefficients.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic);

}  // namespace eaqecc

#endif  // EAQECC_FIELD_H
