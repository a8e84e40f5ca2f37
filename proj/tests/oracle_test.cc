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

#include "eaqecc/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "eaqecc/eaqecc.h"
#include "gtest/gtest.h"

using namespace eaqecc;

namespace {

const ExponentSet kQ8T1{10, 19, 28, 37, 46, 55};

ExponentSet omega_without(const CodeFrame& f, const ExponentSet& drop) {
    std::vector<std::uint64_t> v;
    for (auto w : omega(f)) {
        if (!drop.contains(w)) {
            v.push_back(w);
        }
    }
    return ExponentSet(std::move(v));
}

// Minimum weight over all m(x) g(x) with deg m < k. Products have degree
// below n, so no reduction modulo x^n - lambda is needed.
std::size_t min_weight_by_products(const ConstacyclicCode& code) {
    const FieldPtr f = code.ambient()->small();
    const std::size_t k = code.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= f->order();
    }
    std::size_t best = code.length() + 1;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<std::uint64_t> m(k);
        std::uint64_t rest = idx;
        for (auto& digit : m) {
            digit = rest % f->order();
            rest /= f->order();
        }
        const Poly c = Poly(f, m) * code.generator();
        const auto& coeffs = c.coefficients();
        best = std::min<std::size_t>(best, std::count_if(coeffs.begin(), coeffs.end(), [](auto x) { return x != 0; }));
    }
    return best;
}

}  // namespace

TEST(binomial_saturating, values) {
    EXPECT_EQ(binomial_saturating(13, 6), 1716u);
    EXPECT_EQ(binomial_saturating(13, 5), 1287u);
    EXPECT_EQ(binomial_saturating(5, 7), 0u);
    EXPECT_EQ(binomial_saturating(205, 0), 1u);
    EXPECT_EQ(binomial_saturating(3277, 150), UINT64_MAX);
}

TEST(default_work_budget, environment_override) {
    unsetenv("EAQECC_WORK_BUDGET");
    EXPECT_EQ(default_work_budget(), 10'000'000u);
    setenv("EAQECC_WORK_BUDGET", "1234", 1);
    EXPECT_EQ(default_work_budget(), 1234u);
    setenv("EAQECC_WORK_BUDGET", "12x", 1);
    EXPECT_EQ(default_work_budget(), 10'000'000u);
    unsetenv("EAQECC_WORK_BUDGET");
}

TEST(rank_hh_dagger, family_instances) {
    const auto a8 = Ambient::for_q(8);
    EXPECT_EQ(rank_hh_dagger(build_code(a8, kQ8T1)), 4u);
    FamilySpec t0{Family::EvenE3, 8, 0};
    t0.permissive = true;
    EXPECT_EQ(rank_hh_dagger(build_code(a8, family_instance(t0).z)), 0u);
    const FamilyInstance odd = family_instance({Family::Odd, 23, 1});
    EXPECT_EQ(rank_hh_dagger(build_code(Ambient::for_q(23), odd.z)), 4u);
}

TEST(rank_matches_z1, extremes) {
    const auto a8 = Ambient::for_q(8);
    const OracleVerdict all = rank_matches_z1(a8, ExponentSet(omega(a8->frame())));
    EXPECT_EQ(all.value, "rank(HH†) = 13, |Z1| = 13");
    EXPECT_TRUE(*all.agrees);
    const OracleVerdict none = rank_matches_z1(a8, ExponentSet{});
    EXPECT_EQ(none.value, "rank(HH†) = 0, |Z1| = 0");
    EXPECT_TRUE(*none.agrees);
}

TEST(mds_by_minors, q8_table_codes) {
    const auto a8 = Ambient::for_q(8);
    const OracleVerdict t1 = mds_by_minors(build_code(a8, kQ8T1), 1'000'000);
    EXPECT_EQ(t1.value, "MDS, 1716 submatrices");
    EXPECT_TRUE(*t1.agrees);
    EXPECT_FALSE(t1.witness.has_value());
    const OracleVerdict t2 = mds_by_minors(build_code(a8, family_instance({Family::EvenE3, 8, 2}).z), 1'000'000);
    EXPECT_EQ(t2.value, "MDS, 1287 submatrices");
    EXPECT_TRUE(*t2.agrees);
}

TEST(mds_by_minors, budget_is_honoured) {
    const auto a = Ambient::for_q(32);
    const OracleVerdict v = mds_by_minors(build_code(a, family_instance({Family::EvenE1, 32, 1}).z), 10'000'000);
    EXPECT_TRUE(v.work_bound_hit);
    EXPECT_FALSE(v.agrees.has_value());
    EXPECT_EQ(v.work, 0u);
    EXPECT_EQ(mds_by_minors(build_code(Ambient::for_q(8), kQ8T1), 1000).work_bound_hit, true);
}

TEST(mds_by_minors, singular_minor_yields_witness) {
    const FamilyInstance inst = family_instance({Family::MaxE3, 8});
    const OracleVerdict v = mds_by_minors(build_code(Ambient::for_q(8), inst.z), 1'000'000);
    EXPECT_EQ(v.value.rfind("not MDS", 0), 0u) << v.value;
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->rfind("columns ", 0), 0u);
    EXPECT_TRUE(*v.agrees);  // bracketed d makes no MDS claim
}

TEST(exhaustive_distance, small_dimensions_match_product_enumeration) {
    const auto a8 = Ambient::for_q(8);
    const CodeFrame& f = a8->frame();
    const ExponentSet drops[] = {ExponentSet{91}, ExponentSet{10, 55}, ExponentSet{10, 55, 91}};
    const std::size_t dims[] = {1, 2, 3};
    for (std::size_t i = 0; i < 3; ++i) {
        const ConstacyclicCode code = build_code(a8, omega_without(f, drops[i]));
        ASSERT_EQ(code.dimension(), dims[i]);
        const OracleVerdict v = exhaustive_distance(code, 10'000'000);
        ASSERT_FALSE(v.work_bound_hit);
        EXPECT_EQ(v.value, std::to_string(min_weight_by_products(code))) << drops[i].to_string();
        EXPECT_TRUE(*v.agrees);
        EXPECT_EQ(v.work, (1ull << (6 * dims[i])) - 1);  // 64^k - 1
    }
}

TEST(exhaustive_distance, k1_code_is_mds) {
    const auto a8 = Ambient::for_q(8);
    const ConstacyclicCode code = build_code(a8, omega_without(a8->frame(), ExponentSet{91}));
    // k = 1: every nonzero codeword is a scalar multiple of g, which has full weight.
    EXPECT_EQ(exhaustive_distance(code, 100).value, "13");
    EXPECT_EQ(distance_certificate(code).lower, 13u);
}

TEST(exhaustive_distance, budget_is_honoured) {
    const auto a8 = Ambient::for_q(8);
    const OracleVerdict v = exhaustive_distance(build_code(a8, family_instance({Family::EvenE3, 8, 2}).z), 10'000'000);
    EXPECT_TRUE(v.work_bound_hit);
    EXPECT_FALSE(v.agrees.has_value());
}

TEST(recompute_cosets, counts) {
    struct Case {
        std::uint64_t q;
        const char* value;
    };
    for (const Case& c : {Case{8, "7 cosets, 1 of size 1, 6 of size 2"}, Case{23, "54 cosets, 2 of size 1, 52 of size 2"},
                          Case{32, "103 cosets, 1 of size 1, 102 of size 2"}}) {
        const OracleVerdict v = recompute_cosets(CodeFrame::for_q(c.q));
        EXPECT_EQ(v.value, c.value);
        EXPECT_TRUE(*v.agrees);
    }
}

TEST(random_defining_set_probe, q8_agrees_and_is_deterministic) {
    const auto a8 = Ambient::for_q(8);
    const auto first = random_defining_set_probe(a8, 200, 1);
    ASSERT_EQ(first.size(), 200u);
    std::set<std::string> distinct;
    for (const auto& v : first) {
        EXPECT_TRUE(*v.agrees) << *v.witness;
        distinct.insert(v.value);
    }
    EXPECT_GT(distinct.size(), 3u);
    const auto again = random_defining_set_probe(a8, 200, 1);
    for (std::size_t i = 0; i < 200; ++i) {
        EXPECT_EQ(first[i].value, again[i].value);
    }
}

TEST(oracle_kind_name, names) {
    EXPECT_EQ(oracle_kind_name(OracleKind::Rank), "rank");
    EXPECT_EQ(oracle_kind_name(OracleKind::Cosets), "cosets");
}
