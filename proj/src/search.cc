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

#include "eaqecc/search.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eaqecc/oracle.h"

namespace eaqecc {

namespace {

void consider(const ExponentSet& z, std::size_t cosets, const CodeFrame& frame, std::vector<SearchHit>& out) {
    if (z.size() == frame.n()) {
        return;  // the zero code has no minimum distance
    }
    try {
        out.push_back({z, cosets, derive_eaqecc(z, frame)});
    } catch (const std::domain_error&) {
        // No EAQECC: 2k - n + c < 0.
    }
}

void too_many(std::uint64_t count, std::uint64_t budget) {
    throw std::invalid_argument("search space of " + std::to_string(count) + " defining sets exceeds budget " +
                                std::to_string(budget) + "; lower --max-cosets or raise --budget");
}

}  // namespace

std::vector<SearchHit> search_codes(const CodeFrame& frame, const SearchOptions& options) {
    std::vector<SearchHit> hits;
    if (options.max_cosets == 0) {
        return hits;
    }
    const auto cosets = partition(frame);
    const std::uint64_t n = frame.n();
    const std::uint64_t ord = frame.ord_lambda();

    if (options.consecutive_only) {
        const std::uint64_t count = n > options.budget / n ? options.budget + 1 : n * n;
        if (count > options.budget) {
            too_many(count, options.budget);
        }
        std::set<std::vector<std::uint64_t>> seen;
        for (std::uint64_t start = 0; start < n; ++start) {
            std::vector<std::uint64_t> values;
            for (std::uint64_t len = 1; len <= n; ++len) {
                values.push_back(1 + ((start + len - 1) % n) * ord);
                ExponentSet z(values);
                if (!is_coset_closed(z, frame)) {
                    continue;
                }
                const std::size_t k = coset_representatives(z, frame).size();
                if (k > options.max_cosets || !seen.insert(z.values()).second) {
                    continue;
                }
                consider(z, k, frame, hits);
            }
        }
    } else {
        const std::size_t total = cosets.size();
        const std::size_t kmax = std::min(options.max_cosets, total);
        std::uint64_t count = 0;
        for (std::size_t k = 1; k <= kmax; ++k) {
            const std::uint64_t b = binomial_saturating(total, k);
            count = b > options.budget - count ? options.budget + 1 : count + b;
            if (count > options.budget) {
                too_many(count, options.budget);
            }
        }
        for (std::size_t k = 1; k <= kmax; ++k) {
            std::vector<std::size_t> pick(k);
            for (std::size_t i = 0; i < k; ++i) {
                pick[i] = i;
            }
            while (true) {
                std::vector<std::uint64_t> values;
                for (auto i : pick) {
                    values.insert(values.end(), cosets[i].elements.begin(), cosets[i].elements.end());
                }
                consider(ExponentSet(std::move(values)), k, frame, hits);
                std::size_t i = k;
                while (i > 0 && pick[i - 1] == total - k + i - 1) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++pick[i - 1];
                for (std::size_t j = i; j < k; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
    }

    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.params.c != b.params.c) {
            return a.params.c > b.params.c;
        }
        if (a.params.d.lower != b.params.d.lower) {
            return a.params.d.lower > b.params.d.lower;
        }
        if (a.params.k != b.params.k) {
            return a.params.k > b.params.k;
        }
        return a.z.values() < b.z.values();
    });
    return hits;
}

}  // namespace eaqecc
