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

#include "eaqecc/validate.h"

#include <sstream>
#include <stdexcept>

#include "eaqecc/oracle.h"

namespace eaqecc {

namespace {

CheckStatus verdict(bool ok) {
    return ok ? CheckStatus::Pass : CheckStatus::Fail;
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

bool all_columns_nonzero(const Matrix& h) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < h.rows() && !nonzero; ++r) {
            nonzero = h.at(r, c) != 0;
        }
        if (!nonzero) {
            return false;
        }
    }
    return true;
}

void add(ValidationReport& r, std::string name, CheckStatus status, std::string expected, std::string actual) {
    r.checks.push_back({std::move(name), status, std::move(expected), std::move(actual)});
}

}  // namespace

std::string_view check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "PASS";
        case CheckStatus::Fail:
            return "FAIL";
        case CheckStatus::Info:
            return "INFO";
    }
    return "?";
}

bool ValidationReport::passed() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_instance(const FamilyInstance& inst, const ValidationOptions& options) {
    ValidationReport r{inst, {}, {}, {}, {}, {}, {}};
    const CodeFrame& frame = inst.frame;
    const bool maximal = is_maximal_family(inst.spec.family);
    r.decomposition = decompose(inst.z, frame);
    r.classical = classical_params(inst.z, frame);

    if (!inst.in_theorem_range) {
        add(r, "theorem range", CheckStatus::Info, "in range", "outside theorem range");
    }

    bool derived = true;
    try {
        r.computed = derive_eaqecc(inst.z, frame);
        r.singleton = ea_singleton_check(r.computed);
    } catch (const std::domain_error& e) {
        derived = false;
        add(r, "eaqecc", CheckStatus::Fail, "2k - n + c >= 0", e.what());
    }

    const std::size_t c = r.decomposition.c;
    if (inst.predicted_z1) {
        const bool match = *inst.predicted_z1 == r.decomposition.z1;
        if (inst.z1_provenance == Provenance::Proven) {
            add(r, "Z1 closed form", verdict(match), inst.predicted_z1->to_string(), r.decomposition.z1.to_string());
        } else {
            add(r, "Z1 conjectured form", CheckStatus::Info,
                inst.predicted_z1->to_string(), r.decomposition.z1.to_string() + (match ? " (match)" : " (mismatch)"));
        }
    }

    if (inst.in_theorem_range) {
        add(r, "c", verdict(c == 4), "4", std::to_string(c));
    } else {
        add(r, "c", CheckStatus::Info, "-", std::to_string(c));
    }

    if (inst.predicted_classical && inst.predicted && derived) {
        const ClassicalParams& pc = *inst.predicted_classical;
        const EaqeccParams& pq = *inst.predicted;
        if (maximal) {
            add(r, "classical", verdict(pc.n == r.classical.n && pc.k == r.classical.k),
                "[" + std::to_string(pc.n) + "," + std::to_string(pc.k) + ",d≥2]", r.classical.to_string());
            add(r, "eaqecc", verdict(pq.n == r.computed.n && pq.k == r.computed.k && pq.c == r.computed.c),
                pq.to_string(), r.computed.to_string());
            add(r, "maximal entanglement", verdict(r.computed.is_maximal_entanglement), "n - k = c",
                std::to_string(static_cast<std::int64_t>(r.computed.n) - r.computed.k) + " vs c = " +
                    std::to_string(r.computed.c));
            const std::uint64_t bch = consecutive_run(inst.z, frame) + 1;
            add(r, "BCH bound", verdict(bch >= 2), "≥ 2", std::to_string(bch));
        } else {
            add(r, "classical", verdict(pc.n == r.classical.n && pc.k == r.classical.k && pc.d == r.classical.d),
                pc.to_string(), r.classical.to_string() + " (" + r.classical.d.certificate + ")");
            add(r, "eaqecc", verdict(pq.same_code(r.computed)), pq.to_string(), r.computed.to_string());
            add(r, "EA-Singleton equality", verdict(r.computed.attains_ea_singleton), "defect 0",
                r.singleton.exact ? "defect " + std::to_string(r.singleton.defect_low)
                                  : "defect in [" + std::to_string(r.singleton.defect_low) + "," +
                                        std::to_string(r.singleton.defect_high) + "]");
            add(r, "EA-MDS with d ≤ (n+2)/2", CheckStatus::Info, "-",
                yes_no(r.computed.is_ea_mds) + " (d = " + r.computed.d.to_string() +
                    ", (n+2)/2 = " + std::to_string((r.computed.n + 2) / 2) + ")");
        }
    } else if (derived) {
        add(r, "eaqecc", CheckStatus::Info, "-", r.computed.to_string());
    }

    if (options.rank_oracle) {
        const ConstacyclicCode code = build_code(Ambient::for_q(frame.q()), inst.z);
        add(r, "generator roots", verdict(roots_match_defining_set(code)), "zeros exactly on Z",
            roots_match_defining_set(code) ? "zeros exactly on Z" : "mismatch");
        const Matrix h = parity_check_matrix(code);
        r.rank = rank_hh_dagger(h, frame.q());
        add(r, "rank(HH†) = |Z1|", verdict(*r.rank == c), std::to_string(c), std::to_string(*r.rank));
        if (maximal) {
            add(r, "no weight-1 codeword", verdict(all_columns_nonzero(h)), "all columns of H nonzero",
                all_columns_nonzero(h) ? "all columns of H nonzero" : "zero column present");
        }
    }
    return r;
}

ValidationReport validate_family(const FamilySpec& spec, const ValidationOptions& options) {
    return validate_instance(family_instance(spec), options);
}

nlohmann::ordered_json to_json(const ValidationReport& r) {
    using nlohmann::ordered_json;
    const FamilyInstance& inst = r.instance;
    ordered_json j;
    j["family"] = std::string(family_name(inst.spec.family));
    j["q"] = inst.spec.q;
    if (!is_maximal_family(inst.spec.family)) {
        j["t"] = inst.spec.t;
    }
    if (inst.spec.m != 0) {
        j["m"] = inst.spec.m;
    }
    if (inst.spec.family == Family::MaxOdd) {
        j["variant"] = inst.spec.variant == Variant::A ? "A" : "B";
    }
    j["in_theorem_range"] = inst.in_theorem_range;
    j["n"] = inst.frame.n();
    j["rn"] = inst.frame.rn();
    j["Z"] = inst.z.values();
    j["Z1"] = r.decomposition.z1.values();
    j["c"] = r.decomposition.c;
    j["classical"] = r.classical.to_string();
    j["distance_certificate"] = r.classical.d.certificate;
    j["eaqecc"] = r.computed.to_string();
    j["attains_ea_singleton"] = r.computed.attains_ea_singleton;
    j["ea_mds"] = r.computed.is_ea_mds;
    j["max_ent"] = r.computed.is_maximal_entanglement;
    if (r.rank) {
        j["rank_hh_dagger"] = *r.rank;
    }
    if (inst.predicted) {
        j["predicted"] = inst.predicted->to_string();
    }
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back(
            {{"name", c.name}, {"status", std::string(check_status_name(c.status))}, {"expected", c.expected}, {"actual", c.actual}});
    }
    j["checks"] = checks;
    j["passed"] = r.passed();
    return j;
}

std::string render_text(const ValidationReport& r) {
    const FamilyInstance& inst = r.instance;
    std::ostringstream os;
    os << "family " << family_name(inst.spec.family) << " q=" << inst.spec.q;
    if (!is_maximal_family(inst.spec.family)) {
        os << " t=" << inst.spec.t;
    }
    if (inst.spec.m != 0) {
        os << " m=" << inst.spec.m;
    }
    if (inst.spec.family == Family::MaxOdd) {
        os << " variant=" << (inst.spec.variant == Variant::A ? "A" : "B");
    }
    os << "\n";
    os << "n=" << inst.frame.n() << " rn=" << inst.frame.rn() << "\n";
    os << "Z  = " << inst.z.to_string() << "\n";
    os << "Z1 = " << r.decomposition.z1.to_string() << "\n";
    os << "classical " << r.classical.to_string() << " (" << r.classical.d.certificate << ")\n";
    os << "eaqecc    " << r.computed.to_string() << "\n";
    for (const auto& c : r.checks) {
        os << check_status_name(c.status) << "  " << c.name << ": expected " << c.expected << ", got " << c.actual
           << "\n";
    }
    os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace eaqecc
