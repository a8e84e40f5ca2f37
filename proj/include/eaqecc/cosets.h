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

#ifndef EAQECC_COSETS_H
#define EAQECC_COSETS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eaqecc {

/// Sorted set of exponents modulo rn.
class ExponentSet {
  public:
    ExponentSet() = default;
    ExponentSet(std::initializer_list<std::uint64_t> values);
    explicit ExponentSet(std::vector<std::uint64_t> values);

    std::size_t size() const {
        return values_.size();
    }
    bool empty() const {
        return values_.empty();
    }
    bool contains(std::uint64_t v) const;
    const std::vector<std::uint64_t>& values() const {
        return values_;
    }
    auto begin() const {
        return values_.begin();
    }
    auto end() const {
        return values_.end();
    }

    ExponentSet operator|(const ExponentSet& other) const;
    ExponentSet operator&(const ExponentSet& other) const;
    ExponentSet operator-(const ExponentSet& other) const;
    bool operator==(const ExponentSet&) const = default;

    /// `[a,b,c]`
    std::string to_string() const;

  private:
    std::vector<std::uint64_t> values_;
};

/// The setting shared by every code of length n over GF(q^2) whose shift
/// constant has order ord_lambda: exponents live modulo rn = ord_lambda * n and
/// the roots of x^n - lambda are indexed by omega = {1 + j*ord_lambda}.
class CodeFrame {
  public:
    /// n = (q^2 + 1) / 5 and ord_lambda = q + 1. Also fills in the distinguished
    /// exponents s and (for even q) r_start.
    static CodeFrame for_q(std::uint64_t q);
    /// Requires q a prime power, gcd(n, q) = 1 and ord_lambda | q^2 - 1.
    static CodeFrame general(std::uint64_t q, std::uint64_t n, std::uint64_t ord_lambda);

    std::uint64_t q() const {
        return q_;
    }
    std::uint64_t characteristic() const {
        return p_;
    }
    unsigned q_exponent() const {
        return e_;
    }
    std::uint64_t n() const {
        return n_;
    }
    std::uint64_t ord_lambda() const {
        return ord_;
    }
    std::uint64_t rn() const {
        return rn_;
    }
    /// (q+6)n/2 for even q, (q^2+1)/2 for odd q.
    std::optional<std::uint64_t> s() const {
        return s_;
    }
    /// (q^2-q)/2, even q only.
    std::optional<std::uint64_t> r_start() const {
        return r_start_;
    }

    bool in_omega(std::uint64_t i) const {
        return i < rn_ && i % ord_ == 1 % ord_;
    }
    /// j such that i = 1 + j*ord_lambda.
    std::uint64_t omega_index(std::uint64_t i) const {
        return (i - 1) / ord_;
    }
    /// Reduces a signed exponent into [0, rn).
    std::uint64_t reduce(std::int64_t i) const;

  private:
    CodeFrame() = default;

    std::uint64_t q_ = 0;
    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t ord_ = 0;
    std::uint64_t rn_ = 0;
    std::optional<std::uint64_t> s_;
    std::optional<std::uint64_t> r_start_;
};

/// One q^2-cyclotomic coset modulo rn.
struct Coset {
    std::uint64_t representative;         // minimum element
    std::vector<std::uint64_t> elements;  // sorted

    bool operator==(const Coset&) const = default;
};

struct DefiningSetDecomposition {
    ExponentSet z;
    ExponentSet z1;  // Z ∩ (-qZ)
    ExponentSet z2;  // Z \ Z1
    std::size_t c = 0;
    bool coset_closed = true;
};

/// [1, 1+ord, ..., 1+(n-1)ord]
std::vector<std::uint64_t> omega(const CodeFrame& frame);

/// Orbit of i under multiplication by q^2 mod rn. Throws if i is not in omega.
Coset coset_of(std::uint64_t i, const CodeFrame& frame);

/// All cosets of omega, sorted by representative.
std::vector<Coset> partition(const CodeFrame& frame);

/// Union of the cosets containing each (signed, reduced mod rn) index.
ExponentSet coset_union(std::span<const std::int64_t> indices, const CodeFrame& frame);

bool is_coset_closed(const ExponentSet& z, const CodeFrame& frame);

/// Minimum elements of the cosets that make up z (z must be coset-closed).
std::vector<std::uint64_t> coset_representatives(const ExponentSet& z, const CodeFrame& frame);

/// {-q*x mod rn : x in S}
ExponentSet neg_q_image(const ExponentSet& s, const CodeFrame& frame);

DefiningSetDecomposition decompose(const ExponentSet& z, const CodeFrame& frame);

/// True iff Z ∩ (-qZ) is empty, i.e. the code contains its Hermitian dual.
bool dual_containing(const ExponentSet& z, const CodeFrame& frame);

/// Longest run {1+j*ord, 1+(j+1)*ord, ...} inside z, cyclic in j.
std::uint64_t consecutive_run(const ExponentSet& z, const CodeFrame& frame);

}  // namespace eaqecc

#endif  // EAQECC_COSETS_H
