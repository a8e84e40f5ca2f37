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

#ifndef EAQECC_SEARCH_H
#define EAQECC_SEARCH_H

#include <cstdint>
#include <limits>
#include <vector>

#include "eaqecc/cosets.h"
#include "eaqecc/eaqecc.h"

namespace eaqecc {

struct SearchOptions {
    std::size_t max_cosets = std::numeric_limits<std::size_t>::max();
    /// Only cyclic intervals {1 + j*ord : j0 <= j < j0 + L} of omega.
    bool consecutive_only = false;
    /// Upper bound on the number of candidate defining sets.
    std::uint64_t budget = 10'000'000;
};

struct SearchHit {
    ExponentSet z;
    std::size_t cosets = 0;
    EaqeccParams params;
};

/// Enumerates nonempty coset-closed defining sets with at most max_cosets
/// cosets and derives their parameters. Z = omega and sets with 2k - n + c < 0
/// are dropped.
/// Sorted by c, then d, then k (all descending), then Z. Throws
/// std::invalid_argument if the candidate count exceeds the budget.
std::vector<SearchHit> search_codes(const CodeFrame& frame, const SearchOptions& options);

}  // namespace eaqecc

#endif  // EAQECC_SEARCH_H
