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

#ifndef EAQECC_NUMBER_THEORY_H
#define EAQECC_NUMBER_THEORY_H

#include <cstdint>
#include <optional>
#include <vector>

namespace eaqecc {

/// Integer helpers for exponent arithmetic. Products go through 128-bit
/// intermediates so exponents near 2^63 never overflow.

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// a mod m for possibly negative a, result in [0, m).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in ascending order (Pollard rho + Miller-Rabin).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// p^m, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace eaqecc

#endif  // EAQECC_NUMBER_THEORY_H
