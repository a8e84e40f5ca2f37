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

#ifndef EAQECC_EAQECC_H
#define EAQECC_EAQECC_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "eaqecc/constacyclic.h"
#include "eaqecc/cosets.h"

namespace eaqecc {

/// Classical [n, k, d] over GF(q^2).
struct ClassicalParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    DistanceBound d;

    /// "[13,7,7]" or "[13,9,[3,5]]"
    std::string to_string() const;
};

/// [[n, k, d; c]]_q
struct EaqeccParams {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    DistanceBound d;
    std::uint64_t c = 0;
    /// n + c - k = 2(d - 1) with d exact.
    bool attains_ea_singleton = false;
    /// attains_ea_singleton and d <= (n + 2) / 2.
    bool is_ea_mds = false;
    /// n - k = c
    bool is_maximal_entanglement = false;

    /// "[[13,5,7;4]]_8"; a bracketed distance renders as "[3,5]".
    std::string to_string() const;
    bool same_code(const EaqeccParams& other) const {
        return q == other.q && n == other.n && k == other.k && d == other.d && c == other.c;
    }
};

ClassicalParams classical_params(const ExponentSet& z, const CodeFrame& frame);

/// Uses c = |Z1|. Throws std::domain_error if 2k - n + c < 0.
EaqeccParams derive_eaqecc(const ExponentSet& z, const CodeFrame& frame);
EaqeccParams derive_eaqecc(const ConstacyclicCode& code, const DefiningSetDecomposition& dec);

struct SingletonCheck {
    /// n + c - k - 2(d - 1), evaluated at d.upper and d.lower respectively.
    std::int64_t defect_low = 0;
    std::int64_t defect_high = 0;
    bool exact = false;
    bool is_mds = false;
};

SingletonCheck ea_singleton_check(const EaqeccParams& p);

enum class Family { EvenE1, EvenE3, Odd, MaxE1, MaxE3, MaxOdd };

/// "even-e1", "even-e3", "odd", "max-e1", "max-e3", "max-odd"
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool is_maximal_family(Family f);

/// The two defining-set choices of the odd maximal-entanglement family.
/// Auto picks A for q = 20m+3 and B for q = 20m+7.
enum class Variant { Auto, A, B };

struct FamilySpec {
    Family family = Family::EvenE1;
    std::uint64_t q = 0;
    std::int64_t t = 1;
    /// Odd families only; 0 derives m from q.
    std::uint64_t m = 0;
    Variant variant = Variant::Auto;
    /// Accepts t outside the proven range as long as the coset union is defined.
    bool permissive = false;
};

enum class Provenance { Proven, Conjectured };

struct FamilyInstance {
    FamilySpec spec;  // with m and variant resolved
    CodeFrame frame;
    ExponentSet z;
    bool in_theorem_range = true;
    /// Closed-form predictions; absent outside the theorem range.
    std::optional<ClassicalParams> predicted_classical;
    std::optional<EaqeccParams> predicted;
    std::optional<ExponentSet> predicted_z1;
    Provenance z1_provenance = Provenance::Proven;
};

/// Builds Z and the predictions for any family. Throws std::invalid_argument
/// naming the violated constraint.
FamilyInstance family_instance(const FamilySpec& spec);
/// The maximal-entanglement families only.
FamilyInstance maximal_family_instance(const FamilySpec& spec);

/// Smallest and largest t of the proven range; m is resolved from q for odd q.
std::pair<std::int64_t, std::int64_t> theorem_t_range(Family f, std::uint64_t q);

/// The odd-family m with q = 20m+3 or 20m+7; nullopt for other q.
std::optional<std::uint64_t> odd_family_m(std::uint64_t q);

}  // namespace eaqecc

#endif  // EAQECC_EAQECC_H
