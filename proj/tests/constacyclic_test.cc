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

#include "eaqecc/constacyclic.h"

#include <stdexcept>

#include "gtest/gtest.h"

using namespace eaqecc;

namespace {

ExponentSet q8_t1() {
    return {10, 19, 28, 37, 46, 55};
}

ExponentSet odd_family_set(const CodeFrame& f, std::int64_t cosets) {
    std::vector<std::int64_t> idx;
    const auto s = static_cast<std::int64_t>(*f.s());
    for (std::int64_t i = 0; i < cosets; ++i) {
        idx.push_back(s - static_cast<std::int64_t>(f.q() + 1) * i);
    }
    return coset_union(idx, f);
}

// Evaluates g, lifted into GF(q^4), at delta^w.
std::uint64_t lifted_eval(const ConstacyclicCode& code, std::uint64_t w) {
    const Ambient& a = *code.ambient();
    std::vector<std::uint64_t> lifted;
    for (auto c : code.generator().coefficients()) {
        lifted.push_back(a.tower().embed_raw(c));
    }
    return Poly(a.big(), lifted).evaluate(a.delta_power(w));
}

}  // namespace

class AmbientSweep : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(AmbientSweep, delta_and_lambda) {
    const auto a = Ambient::for_q(GetParam());
    const std::uint64_t q = GetParam();
    const Field& small = *a->small();
    const Field& big = *a->big();
    EXPECT_EQ(small.multiplicative_order(a->lambda()), q + 1);
    EXPECT_EQ(a->lambda(), small.pow(small.generator(), (q * q - 1) / (q + 1)));
    EXPECT_EQ(big.multiplicative_order(a->delta()), a->frame().rn());
    EXPECT_EQ(big.pow(a->delta(), a->frame().n()), a->tower().embed(a->lambda()));
    EXPECT_EQ(a->delta_power(a->frame().rn() + 3), big.pow(a->delta(), 3).value());
    EXPECT_EQ(Ambient::for_q(q), a);  // memoized
}

INSTANTIATE_TEST_SUITE_P(q, AmbientSweep, ::testing::Values(8, 23, 32, 47, 128));

TEST(build_code, q8_t1) {
    const auto a = Ambient::for_q(8);
    const ConstacyclicCode code = build_code(a, q8_t1());
    EXPECT_EQ(code.generator().degree(), 6);
    EXPECT_TRUE(code.generator().is_monic());
    EXPECT_EQ(code.dimension(), 7u);
    const Poly xn = Poly::binomial(a->small(), 13, a->lambda().value());
    const auto qr = xn.divmod(code.generator());
    EXPECT_TRUE(qr.remainder.is_zero());
    EXPECT_EQ(qr.quotient * code.generator(), xn);
    // Root discipline checked directly in GF(q^4).
    for (auto w : omega(a->frame())) {
        EXPECT_EQ(lifted_eval(code, w) == 0, code.defining_set().contains(w)) << w;
    }
    EXPECT_TRUE(roots_match_defining_set(code));
}

TEST(build_code, empty_defining_set_is_full_space) {
    const ConstacyclicCode code = build_code(Ambient::for_q(8), ExponentSet{});
    EXPECT_EQ(code.generator(), Poly::constant(Ambient::for_q(8)->small(), 1));
    EXPECT_EQ(code.dimension(), 13u);
    EXPECT_EQ(bch_bound(code), 1u);
    EXPECT_EQ(parity_check_matrix(code).rows(), 0u);
    EXPECT_EQ(generator_matrix(code), Matrix::identity(code.ambient()->small(), 13));
}

TEST(build_code, q23_t1_dimension) {
    const auto a = Ambient::for_q(23);
    const ConstacyclicCode code = build_code(a, odd_family_set(a->frame(), 8));
    EXPECT_EQ(code.dimension(), 91u);  // 106 - 15
    EXPECT_EQ(bch_bound(code), 16u);
    EXPECT_TRUE(roots_match_defining_set(code));
}

TEST(build_code, rejects_bad_sets) {
    const auto a = Ambient::for_q(8);
    EXPECT_THROW(build_code(a, ExponentSet{28}), std::invalid_argument);
    EXPECT_THROW(build_code(a, ExponentSet{2}), std::invalid_argument);
}

TEST(build_code, frame_overload) {
    const ConstacyclicCode code = build_code(CodeFrame::for_q(8), q8_t1());
    EXPECT_EQ(code.generator(), build_code(Ambient::for_q(8), q8_t1()).generator());
}

TEST(distance_certificate, examples) {
    const auto a8 = Ambient::for_q(8);
    const ConstacyclicCode c8 = build_code(a8, q8_t1());
    EXPECT_EQ(bch_bound(c8), 7u);
    const DistanceBound d8 = distance_certificate(c8);
    EXPECT_TRUE(d8.exact());
    EXPECT_EQ(d8.lower, 7u);
    EXPECT_EQ(d8.certificate, "BCH∧Singleton");
    EXPECT_EQ(d8.to_string(), "7");

    // [205,185,21] at q = 32, t = 1: 10 cosets from r_start.
    const CodeFrame f32 = CodeFrame::for_q(32);
    std::vector<std::int64_t> idx;
    for (std::int64_t i = 0; i <= 9; ++i) {
        idx.push_back(static_cast<std::int64_t>(*f32.r_start()) - 33 * i);
    }
    const DistanceBound d32 = distance_certificate(coset_union(idx, f32), f32);
    EXPECT_TRUE(d32.exact());
    EXPECT_EQ(d32.lower, 21u);

    // A single pair that is not a run: {10, 55} sit at j = 1 and j = 6.
    const DistanceBound bracket = distance_certificate(ExponentSet{10, 55}, a8->frame());
    EXPECT_FALSE(bracket.exact());
    EXPECT_EQ(bracket.lower, 2u);
    EXPECT_EQ(bracket.upper, 3u);  // n - k + 1 with k = 11
    EXPECT_EQ(bracket.to_string(), "[2,3]");
}

TEST(parity_check_matrix, q8_t1) {
    const ConstacyclicCode code = build_code(Ambient::for_q(8), q8_t1());
    const Matrix h = parity_check_matrix(code);
    const Matrix g = generator_matrix(code);
    EXPECT_EQ(h.rows(), 6u);
    EXPECT_EQ(h.cols(), 13u);
    EXPECT_EQ(rank(h), 6u);
    EXPECT_EQ(g.rows(), 7u);
    EXPECT_EQ(rank(g), 7u);
    EXPECT_TRUE(multiply_transposed(h, g).is_zero());
    for (std::size_t c = 0; c < h.cols(); ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < h.rows(); ++r) {
            nonzero = nonzero || h.at(r, c) != 0;
        }
        EXPECT_TRUE(nonzero) << "column " << c;
    }
}

TEST(parity_check_matrix, annihilates_generator_across_q) {
    for (std::uint64_t q : {23u, 47u}) {
        const auto a = Ambient::for_q(q);
        const ConstacyclicCode code = build_code(a, odd_family_set(a->frame(), 9));
        const Matrix h = parity_check_matrix(code);
        EXPECT_EQ(rank(h), code.defining_set().size());
        EXPECT_TRUE(multiply_transposed(h, generator_matrix(code)).is_zero()) << q;
    }
}

TEST(generator_matrix, shift_closure) {
    const auto a = Ambient::for_q(8);
    const ConstacyclicCode code = build_code(a, q8_t1());
    const Matrix g = generator_matrix(code);
    const Matrix h = parity_check_matrix(code);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const auto shifted = constacyclic_shift(g.row(r), code.lambda(), *a->small());
        Matrix word(a->small(), 1, shifted.size());
        for (std::size_t j = 0; j < shifted.size(); ++j) {
            word.set(0, j, shifted[j]);
        }
        EXPECT_TRUE(multiply_transposed(h, word).is_zero()) << "row " << r;
    }
}

TEST(constacyclic_shift, wraps_with_lambda) {
    auto f = Field::make(23, 1);
    const std::vector<std::uint64_t> w{1, 2, 3};
    EXPECT_EQ(constacyclic_shift(w, f->element(5), *f), (std::vector<std::uint64_t>{15, 1, 2}));
}

TEST(hermitian_dual_defining_set, examples) {
    const CodeFrame f = CodeFrame::for_q(8);
    const ExponentSet all(omega(f));
    EXPECT_EQ(hermitian_dual_defining_set(ExponentSet{}, f), all);
    EXPECT_TRUE(hermitian_dual_defining_set(all, f).empty());
    const ExponentSet dual = hermitian_dual_defining_set(q8_t1(), f);
    EXPECT_EQ(dual.size(), 7u);
    EXPECT_NE(dual & q8_t1(), q8_t1());  // not dual-containing at t = 1
}

TEST(hermitian_dual_defining_set, dual_containing_means_contains_dual) {
    const CodeFrame f = CodeFrame::for_q(8);
    const ExponentSet z{19, 28, 37, 46};
    EXPECT_TRUE(dual_containing(z, f));
    const ExponentSet dual = hermitian_dual_defining_set(z, f);
    // Dual code's defining set contains Z, so the dual code is a subcode.
    EXPECT_EQ(dual & z, z);
}
