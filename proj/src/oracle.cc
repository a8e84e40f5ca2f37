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
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eaqecc {

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ']';
    return os.str();
}

}  // namespace

std::string_view oracle_kind_name(OracleKind kind) {
    switch (kind) {
        case OracleKind::Rank:
            return "rank";
        case OracleKind::Mds:
            return "mds";
        case OracleKind::Distance:
            return "distance";
        case OracleKind::Cosets:
            return "cosets";
    }
    return "?";
}

std::uint64_t default_work_budget() {
    constexpr std::uint64_t kDefault = 10'000'000;
    const char* env = std::getenv("EAQECC_WORK_BUDGET");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
        return kDefault;
    }
    return v;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        // acc * (n - r + i) / i stays integral at every step.
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::size_t rank_hh_dagger(const Matrix& h, std::uint64_t q) {
    return rank(multiply_transposed(h, h.conjugate(q)));
}

std::size_t rank_hh_dagger(const ConstacyclicCode& code) {
    return rank_hh_dagger(parity_check_matrix(code), code.frame().q());
}

OracleVerdict mds_by_minors(const ConstacyclicCode& code, std::uint64_t work_budget) {
    OracleVerdict v;
    v.kind = OracleKind::Mds;
    const std::size_t n = code.length();
    const std::size_t r = n - code.dimension();
    const DistanceBound cert = distance_certificate(code);
    const std::uint64_t subsets = binomial_saturating(n, r);
    if (subsets > work_budget) {
        v.work_bound_hit = true;
        v.value = "C(" + std::to_string(n) + "," + std::to_string(r) + ") subsets exceed budget " +
                  std::to_string(work_budget);
        return v;
    }
    const Matrix h = parity_check_matrix(code);
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    bool mds = true;
    while (true) {
        ++v.work;
        Matrix sub = h.select_columns(cols);
        if (rank(sub) != r) {
            mds = false;
            v.witness = "columns " + join(cols) + " submatrix " + sub.to_string();
            break;
        }
        // Next r-combination of [0, n) in lexicographic order.
        std::size_t i = r;
        while (i > 0 && cols[i - 1] == n - r + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++cols[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            cols[j] = cols[j - 1] + 1;
        }
    }
    v.value = (mds ? "MDS, " : "not MDS, ") + std::to_string(v.work) + " submatrices";
    // A bracket makes no MDS claim, so either outcome is consistent with it.
    v.agrees = cert.exact() ? mds == (cert.lower == r + 1) : true;
    return v;
}

OracleVerdict exhaustive_distance(const ConstacyclicCode& code, std::uint64_t work_budget) {
    OracleVerdict v;
    v.kind = OracleKind::Distance;
    const Field& f = *code.ambient()->small();
    const std::uint64_t order = f.order();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > work_budget / order) {
            v.work_bound_hit = true;
            v.value = "(q^2)^k = " + std::to_string(order) + "^" + std::to_string(k) + " codewords exceed budget " +
                      std::to_string(work_budget);
            return v;
        }
        total *= order;
    }
    const DistanceBound cert = distance_certificate(code);
    if (k == 0) {
        v.value = "no nonzero codewords";
        v.agrees = true;
        return v;
    }

    const Matrix g = generator_matrix(code);
    std::vector<std::uint64_t> msg(k, 0);
    std::vector<std::uint64_t> word(n, 0);
    std::vector<std::uint64_t> best;
    std::size_t best_weight = n + 1;
    // Odometer over messages; each step changes one digit and updates the
    // codeword by the difference times that generator row.
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (msg[i] == order - 1) {
            std::uint64_t diff = f.sub_raw(0, msg[i]);
            auto row = g.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                word[j] = f.add_raw(word[j], f.mul_raw(diff, row[j]));
            }
            msg[i] = 0;
            ++i;
        }
        const std::uint64_t diff = f.sub_raw(msg[i] + 1, msg[i]);
        auto row = g.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            word[j] = f.add_raw(word[j], f.mul_raw(diff, row[j]));
        }
        ++msg[i];
        const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](auto x) { return x != 0; }));
        if (weight < best_weight) {
            best_weight = weight;
            best = word;
        }
    }
    v.work = total - 1;
    v.value = std::to_string(best_weight);
    v.witness = "codeword " + join(best);
    v.agrees = cert.lower <= best_weight && best_weight <= cert.upper;
    return v;
}

OracleVerdict recompute_cosets(const CodeFrame& frame) {
    OracleVerdict v;
    v.kind = OracleKind::Cosets;
    const std::uint64_t rn = frame.rn();
    const std::uint64_t ord = frame.ord_lambda();
    const std::uint64_t q2 = frame.q() * frame.q();
    std::vector<bool> seen(rn, false);
    std::vector<Coset> naive;
    for (std::uint64_t i = 1 % ord; i < rn; i += ord) {
        if (seen[i]) {
            continue;
        }
        Coset c{i, {}};
        std::uint64_t x = i;
        do {
            seen[x] = true;
            c.elements.push_back(x);
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q2 % rn);
            ++v.work;
        } while (x != i);
        std::sort(c.elements.begin(), c.elements.end());
        c.representative = c.elements.front();
        naive.push_back(std::move(c));
    }
    std::sort(naive.begin(), naive.end(),
              [](const Coset& a, const Coset& b) { return a.representative < b.representative; });

    std::map<std::size_t, std::size_t> by_size;
    for (const auto& c : naive) {
        ++by_size[c.elements.size()];
    }
    std::ostringstream os;
    os << naive.size() << " cosets";
    for (auto [size, count] : by_size) {
        os << ", " << count << " of size " << size;
    }
    v.value = os.str();

    const auto fast = partition(frame);
    v.agrees = fast == naive;
    if (!*v.agrees) {
        for (std::size_t i = 0; i < std::max(fast.size(), naive.size()); ++i) {
            if (i >= fast.size() || i >= naive.size() || !(fast[i] == naive[i])) {
                const auto& c = i < naive.size() ? naive[i] : fast[i];
                v.witness = "first difference at coset of " + std::to_string(c.representative);
                break;
            }
        }
    }
    return v;
}

OracleVerdict rank_matches_z1(const AmbientPtr& ambient, const ExponentSet& z) {
    OracleVerdict v;
    v.kind = OracleKind::Rank;
    const ConstacyclicCode code = build_code(ambient, z);
    const std::size_t r = rank_hh_dagger(code);
    const std::size_t c = decompose(z, ambient->frame()).c;
    v.work = z.size();
    v.value = "rank(HH†) = " + std::to_string(r) + ", |Z1| = " + std::to_string(c);
    v.agrees = r == c;
    if (r != c) {
        v.witness = "Z = " + z.to_string();
    }
    return v;
}

std::vector<OracleVerdict> random_defining_set_probe(const AmbientPtr& ambient, std::size_t trials,
                                                     std::uint64_t seed) {
    const auto cosets = partition(ambient->frame());
    std::mt19937_64 rng(seed);
    std::vector<OracleVerdict> out;
    out.reserve(trials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<std::uint64_t> values;
        for (int attempt = 0; values.empty(); ++attempt) {
            if (attempt == 64) {
                throw std::runtime_error("random_defining_set_probe: could not draw a nonempty Z");
            }
            for (const auto& c : cosets) {
                if (rng() & 1) {
                    values.insert(values.end(), c.elements.begin(), c.elements.end());
                }
            }
        }
        out.push_back(rank_matches_z1(ambient, ExponentSet(std::move(values))));
    }
    return out;
}

}  // namespace eaqecc
