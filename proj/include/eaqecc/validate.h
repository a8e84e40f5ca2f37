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

#ifndef EAQECC_VALIDATE_H
#define EAQECC_VALIDATE_H

#include <optional>
#include <string>
#include <vector>

#include "eaqecc/eaqecc.h"
#include "json.hpp"

namespace eaqecc {

enum class CheckStatus { Pass, Fail, Info };

std::string_view check_status_name(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Info;
    std::string expected;
    std::string actual;
};

struct ValidationOptions {
    /// Build H and compare rank(H H^dagger) with |Z1|.
    bool rank_oracle = true;
};

/// Everything computed for one family instance, plus the comparisons against
/// its closed-form predictions. Mismatches are checks, never exceptions.
struct ValidationReport {
    FamilyInstance instance;
    DefiningSetDecomposition decomposition;
    ClassicalParams classical;
    EaqeccParams computed;
    SingletonCheck singleton;
    std::optional<std::size_t> rank;
    std::vector<Check> checks;

    bool passed() const;
};

ValidationReport validate_instance(const FamilyInstance& instance, const ValidationOptions& options = {});
ValidationReport validate_family(const FamilySpec& spec, const ValidationOptions& options = {});

nlohmann::ordered_json to_json(const ValidationReport& report);
std::string render_text(const ValidationReport& report);

}  // namespace eaqecc

#endif  // EAQECC_VALIDATE_H
