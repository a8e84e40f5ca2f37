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

#include <stdexcept>

#include "gtest/gtest.h"

using namespace eaqecc;

TEST(number_theory, mul_mod_uses_wide_intermediates) {
    const std::uint64_t m = (std::uint64_t{1} << 61) - 1;
    EXPECT_EQ(mul_mod(m - 1, m - 1, m), 1u);
    EXPECT_EQ(pow_mod(3, m - 1, m), 1u);
    EXPECT_EQ(pow_mod(5, 0, 7), 1u);
}

TEST(number_theory, reduce_mod_handles_negatives) {
    EXPECT_EQ(reduce_mod(-80, 117), 37u);
    EXPECT_EQ(reduce_mod(-2231, 2544), 313u);
    EXPECT_EQ(reduce_mod(117, 117), 0u);
}

TEST(number_theory, is_prime) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(561));  // Carmichael
    EXPECT_TRUE(is_prime(47));
    EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
    EXPECT_FALSE(is_prime(std::uint64_t{4294967291} * 3));
}

TEST(number_theory, prime_factors) {
    EXPECT_EQ(prime_factors(4095), (std::vector<std::uint64_t>{3, 5, 7, 13}));
    EXPECT_EQ(prime_factors(1), std::vector<std::uint64_t>{});
    // 2^28 - 1
    EXPECT_EQ(prime_factors(268435455), (std::vector<std::uint64_t>{3, 5, 29, 43, 113, 127}));
    const std::uint64_t semiprime = std::uint64_t{4294967291} * 4294967279;
    EXPECT_EQ(prime_factors(semiprime), (std::vector<std::uint64_t>{4294967279, 4294967291}));
}

TEST(number_theory, divisors) {
    EXPECT_EQ(divisors(117), (std::vector<std::uint64_t>{1, 3, 9, 13, 39, 117}));
    EXPECT_EQ(divisors(1), std::vector<std::uint64_t>{1});
}

TEST(number_theory, as_prime_power) {
    auto pp = as_prime_power(128);
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->prime, 2u);
    EXPECT_EQ(pp->exponent, 7u);
    pp = as_prime_power(529);
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->prime, 23u);
    EXPECT_EQ(pp->exponent, 2u);
    EXPECT_FALSE(as_prime_power(6));
    EXPECT_FALSE(as_prime_power(1));
    EXPECT_FALSE(as_prime_power(0));
}

TEST(number_theory, checked_pow) {
    EXPECT_EQ(checked_pow(2, 63), std::uint64_t{1} << 63);
    EXPECT_FALSE(checked_pow(2, 64));
    EXPECT_EQ(checked_pow(47, 4), 4879681u);
}

TEST(number_theory, multiplicative_order) {
    EXPECT_EQ(multiplicative_order(64, 117), 2u);
    EXPECT_EQ(multiplicative_order(529, 2544), 2u);
    EXPECT_EQ(multiplicative_order(2, 13), 12u);
    EXPECT_THROW(multiplicative_order(3, 9), std::invalid_argument);
}
