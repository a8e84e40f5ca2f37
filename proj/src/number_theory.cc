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

#include "eaqecc/number_theory.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eaqecc {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, mod);
        }
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) {
    if (a >= 0) {
        return static_cast<std::uint64_t>(a) % m;
    }
    std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
    return neg == 0 ? 0 : m - neg;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for every n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) {
        return 2;
    }
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) {
            return d;
        }
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (std::uint64_t small = 2; small < 1000; ++small) {
        if (n % small == 0) {
            out.push_back(small);
            factor_into(n / small, out);
            return;
        }
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("prime_factors: n must be positive");
    }
    std::vector<std::uint64_t> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> result{1};
    for (std::uint64_t p : prime_factors(n)) {
        std::size_t existing = result.size();
        std::uint64_t rest = n;
        std::uint64_t pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) {
                result.push_back(result[i] * pk);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) {
        return std::nullopt;
    }
    auto primes = prime_factors(q);
    if (primes.size() != 1) {
        return std::nullopt;
    }
    unsigned e = 0;
    while (q > 1) {
        q /= primes[0];
        ++e;
    }
    return PrimePower{primes[0], e};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned m) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (__builtin_mul_overflow(result, p, &result)) {
            return std::nullopt;
        }
    }
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m == 0 || std::gcd(a, m) != 1) {
        throw std::invalid_argument("multiplicative_order: a must be a unit modulo m");
    }
    if (m == 1) {
        return 1;
    }
    // The order divides phi(m).
    std::uint64_t phi = m;
    for (std::uint64_t p : prime_factors(m)) {
        phi = phi / p * (p - 1);
    }
    std::uint64_t order = phi;
    for (std::uint64_t p : prime_factors(phi)) {
        while (order % p == 0 && pow_mod(a, order / p, m) == 1) {
            order /= p;
        }
    }
    return order;
}

}  // namespace eaqecc
