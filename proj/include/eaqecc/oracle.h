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

#ifndef EAQECC_ORACLE_H
#define EAQECC_ORACLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaqecc/constacyclic.h"
#include "eaqecc/cosets.h"
#include "eaqecc/matrix.h"

namespace eaqecc {

enum class OracleKind { Rank, Mds, Distance, Cosets };

std::string_view oracle_kind_name(OracleKind kind);

/// Outcome of one brute-force check. agrees is empty when the budget ran out.
struct OracleVerdict {
    OracleKind kind = OracleKind::Rank;
    std::string value;
    std::optional<bool> agrees;
    bool work_bound_hit = false;
    std::optional<std::string> witness;
    /// Units of work actually spent (subsets, codewords, exponents).
    std::uint64_t work = 0;
};

/// 10^7, or EAQECC_WORK_BUDGET when set to a positive integer.
std::uint64_t default_work_budget();

/// rank over GF(q^2) of H H^dagger, where H^dagger conjugates entrywise by x -> x^q.
std::size_t rank_hh_dagger(const Matrix& h, std::uint64_t q);
std::size_t rank_hh_dagger(const ConstacyclicCode& code);

/// Checks that every (n-k)-column submatrix of H is nonsingular. Budget counts subsets.
OracleVerdict mds_by_minors(const ConstacyclicCode& code, std::uint64_t work_budget);

/// Minimum weight over all nonzero codewords. Budget counts codewords (q^2)^k.
OracleVerdict exhaustive_distance(const ConstacyclicCode& code, std::uint64_t work_budget);

/// Recomputes the coset partition by plain orbit enumeration and diffs it
/// against partition().
OracleVerdict recompute_cosets(const CodeFrame& frame);

/// Draws random coset-closed Z (each coset kept with probability 1/2, empty Z
/// redrawn) and compares rank(H H^dagger) with |Z1|. Deterministic in seed.
std::vector<OracleVerdict> random_defining_set_probe(const AmbientPtr& ambient, std::size_t trials,
                                                     std::uint64_t seed);

/// One probe step on a given Z; Z may be empty.
OracleVerdict rank_matches_z1(const AmbientPtr& ambient, const ExponentSet& z);

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r);

}  // namespace eaqecc

#endif  // EAQECC_ORACLE_H
