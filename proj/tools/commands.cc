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

#include "commands.h"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "eaqecc/eaqecc.h"
#include "eaqecc/number_theory.h"
#include "eaqecc/oracle.h"
#include "eaqecc/search.h"
#include "eaqecc/validate.h"
#include "json.hpp"

#ifndef EAQECC_DATA_DIR
#define EAQECC_DATA_DIR "data"
#endif

namespace eaqecc::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };
enum class Level { Analytic, Rank, Minors, Exhaustive };

struct Config {
    std::string format = "text";
    std::uint64_t budget = default_work_budget();
    std::uint64_t seed = 1;
    bool verbose = false;

    Format fmt() const {
        return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    }
};

constexpr const char* kCsvHeader = "q,family,t,m,n,k,d,c,ea_mds,max_ent";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

std::string csv_row(const EaqeccParams& p, std::string_view family, std::optional<std::int64_t> t,
                    std::uint64_t m) {
    std::ostringstream os;
    os << p.q << ',' << family << ',' << (t ? std::to_string(*t) : "") << ',' << (m ? std::to_string(m) : "") << ','
       << p.n << ',' << p.k << ',' << csv_field(p.d.to_string()) << ',' << p.c << ','
       << (p.is_ea_mds ? "true" : "false") << ',' << (p.is_maximal_entanglement ? "true" : "false");
    return os.str();
}

std::string csv_row(const ValidationReport& r) {
    const FamilySpec& s = r.instance.spec;
    std::optional<std::int64_t> t;
    if (!is_maximal_family(s.family)) {
        t = s.t;
    }
    return csv_row(r.computed, family_name(s.family), t, s.m);
}

std::string instance_label(const FamilySpec& s) {
    std::string label = std::string(family_name(s.family)) + " q=" + std::to_string(s.q);
    if (!is_maximal_family(s.family)) {
        label += " t=" + std::to_string(s.t);
    }
    if (s.family == Family::MaxOdd) {
        label += std::string(" variant=") + (s.variant == Variant::A ? "A" : "B");
    }
    return label;
}

// ---- tables ----

struct TableDef {
    Family family;
    std::uint64_t q;
};

TableDef table_def(int id) {
    static const std::map<int, TableDef> defs = {{1, {Family::EvenE1, 32}},
                                                 {2, {Family::EvenE3, 8}},
                                                 {3, {Family::EvenE3, 128}},
                                                 {4, {Family::Odd, 23}},
                                                 {5, {Family::Odd, 47}}};
    auto it = defs.find(id);
    if (it == defs.end()) {
        throw std::invalid_argument("table id must be 1..5");
    }
    return it->second;
}

struct TableRow {
    FamilySpec spec;
    EaqeccParams params;
};

std::vector<TableRow> table_rows(int id) {
    const TableDef def = table_def(id);
    const auto [lo, hi] = theorem_t_range(def.family, def.q);
    std::vector<TableRow> rows;
    for (std::int64_t t = lo; t <= hi; ++t) {
        FamilySpec spec{def.family, def.q, t, 0, Variant::Auto, false};
        const FamilyInstance inst = family_instance(spec);
        rows.push_back({inst.spec, derive_eaqecc(inst.z, inst.frame)});
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

// ---- commands ----

int cmd_cosets(std::uint64_t q, const Config& cfg, std::ostream& out) {
    const CodeFrame frame = CodeFrame::for_q(q);
    const auto cosets = partition(frame);
    std::map<std::size_t, std::size_t> by_size;
    for (const auto& c : cosets) {
        ++by_size[c.elements.size()];
    }
    switch (cfg.fmt()) {
        case Format::Json: {
            ordered_json j;
            j["q"] = q;
            j["n"] = frame.n();
            j["ord_lambda"] = frame.ord_lambda();
            j["rn"] = frame.rn();
            j["s"] = frame.s() ? ordered_json(*frame.s()) : ordered_json(nullptr);
            j["r_start"] = frame.r_start() ? ordered_json(*frame.r_start()) : ordered_json(nullptr);
            ordered_json list = ordered_json::array();
            for (const auto& c : cosets) {
                list.push_back({{"rep", c.representative}, {"elems", c.elements}});
            }
            j["cosets"] = list;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "rep,size,elements\n";
            for (const auto& c : cosets) {
                out << c.representative << ',' << c.elements.size() << ',';
                for (std::size_t i = 0; i < c.elements.size(); ++i) {
                    out << (i ? ";" : "") << c.elements[i];
                }
                out << "\n";
            }
            break;
        case Format::Text:
            out << "q=" << q << " n=" << frame.n() << " ord_lambda=" << frame.ord_lambda() << " rn=" << frame.rn();
            if (frame.s()) {
                out << " s=" << *frame.s();
            }
            if (frame.r_start()) {
                out << " r_start=" << *frame.r_start();
            }
            out << "\n" << cosets.size() << " cosets";
            for (auto [size, count] : by_size) {
                out << ", " << count << " of size " << size;
            }
            out << "\n";
            for (const auto& c : cosets) {
                out << "C_" << c.representative << " = " << ExponentSet(c.elements).to_string() << "\n";
            }
            break;
    }
    return kExitOk;
}

int cmd_family(const FamilySpec& spec, const Config& cfg, std::ostream& out) {
    const ValidationReport report = validate_family(spec);
    switch (cfg.fmt()) {
        case Format::Json:
            out << to_json(report).dump(2) << "\n";
            break;
        case Format::Csv:
            out << kCsvHeader << "\n" << csv_row(report) << "\n";
            break;
        case Format::Text:
            out << render_text(report);
            break;
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_table(int id, const std::string& golden_dir, const Config& cfg, std::ostream& out, std::ostream& err) {
    const TableDef def = table_def(id);
    const std::string text = render_table_text(id);
    const std::string path = golden_dir + "/table" + std::to_string(id) + ".txt";
    std::optional<std::string> golden;
    try {
        golden = read_file(path);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
    }
    const bool identical = golden && *golden == text;

    switch (cfg.fmt()) {
        case Format::Json: {
            ordered_json j;
            j["id"] = id;
            j["family"] = std::string(family_name(def.family));
            j["q"] = def.q;
            ordered_json rows = ordered_json::array();
            for (const auto& r : table_rows(id)) {
                rows.push_back({{"t", r.spec.t}, {"code", r.params.to_string()}});
            }
            j["rows"] = rows;
            j["golden"] = !golden ? "missing" : identical ? "identical" : "different";
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << kCsvHeader << "\n";
            for (const auto& r : table_rows(id)) {
                out << csv_row(r.params, family_name(def.family), r.spec.t, r.spec.m) << "\n";
            }
            break;
        case Format::Text:
            out << text;
            break;
    }

    if (golden && !identical) {
        const auto want = split_lines(*golden);
        const auto got = split_lines(text);
        for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
            const std::string w = i < want.size() ? want[i] : "<none>";
            const std::string g = i < got.size() ? got[i] : "<none>";
            if (w != g) {
                err << "line " << i + 1 << ": golden '" << w << "' computed '" << g << "'\n";
            }
        }
    }
    err << "golden " << path << ": " << (!golden ? "missing" : identical ? "identical" : "DIFFERENT") << "\n";
    return identical ? kExitOk : kExitCheckFailed;
}

std::vector<FamilySpec> verify_specs(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    std::vector<FamilySpec> specs;
    auto add_range = [&](Family mds, Family maximal) {
        const auto [lo, hi] = theorem_t_range(mds, q);
        for (std::int64_t t = lo; t <= hi; ++t) {
            specs.push_back({mds, q, t, 0, Variant::Auto, false});
        }
        specs.push_back({maximal, q, 0, 0, Variant::Auto, false});
    };
    if (pp && pp->prime == 2 && pp->exponent > 1 && pp->exponent % 4 == 1) {
        add_range(Family::EvenE1, Family::MaxE1);
    } else if (pp && pp->prime == 2 && pp->exponent > 1 && pp->exponent % 4 == 3) {
        add_range(Family::EvenE3, Family::MaxE3);
    } else if (pp && pp->prime != 2 && odd_family_m(q)) {
        add_range(Family::Odd, Family::MaxOdd);
    } else {
        throw std::invalid_argument("unsupported q = " + std::to_string(q) + ": no family applies");
    }
    return specs;
}

int cmd_verify(std::uint64_t q, Level level, const Config& cfg, std::ostream& out) {
    const auto specs = verify_specs(q);
    ValidationOptions options;
    options.rank_oracle = level >= Level::Rank;
    std::size_t passed = 0;
    ordered_json all = ordered_json::array();
    if (cfg.fmt() == Format::Csv) {
        out << kCsvHeader << "\n";
    }
    for (const auto& spec : specs) {
        const ValidationReport report = validate_family(spec, options);
        std::vector<OracleVerdict> verdicts;
        if (level >= Level::Minors) {
            const ConstacyclicCode code = build_code(Ambient::for_q(q), report.instance.z);
            verdicts.push_back(mds_by_minors(code, cfg.budget));
            if (level >= Level::Exhaustive) {
                verdicts.push_back(exhaustive_distance(code, cfg.budget));
            }
        }
        bool ok = report.passed();
        std::string oracle_text;
        ordered_json oracle_json = ordered_json::array();
        for (const auto& v : verdicts) {
            ok = ok && v.agrees.value_or(true);
            oracle_text += std::string(" ") + std::string(oracle_kind_name(v.kind)) + ": " +
                           (v.work_bound_hit ? "skipped (" + v.value + ")"
                                             : v.value + (*v.agrees ? "" : " DISAGREES with analytic"));
            ordered_json vj;
            vj["kind"] = std::string(oracle_kind_name(v.kind));
            vj["value"] = v.value;
            vj["agrees_with_analytic"] = v.agrees ? ordered_json(*v.agrees) : ordered_json(nullptr);
            vj["work_bound_hit"] = v.work_bound_hit;
            vj["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
            oracle_json.push_back(vj);
        }
        passed += ok ? 1 : 0;
        switch (cfg.fmt()) {
            case Format::Json: {
                ordered_json j = to_json(report);
                j["oracles"] = oracle_json;
                j["passed"] = ok;
                all.push_back(j);
                break;
            }
            case Format::Csv:
                out << csv_row(report) << "\n";
                break;
            case Format::Text:
                out << (ok ? "PASS " : "FAIL ") << instance_label(report.instance.spec) << " "
                    << report.computed.to_string();
                if (report.rank) {
                    out << " rank(HH†)=" << *report.rank;
                }
                out << oracle_text << "\n";
                if (cfg.verbose || !ok) {
                    out << render_text(report);
                }
                break;
        }
    }
    if (cfg.fmt() == Format::Json) {
        out << all.dump(2) << "\n";
    } else if (cfg.fmt() == Format::Text) {
        out << "verify q=" << q << ": " << specs.size() << " instances, " << passed << " passed\n";
    }
    return passed == specs.size() ? kExitOk : kExitCheckFailed;
}

std::string hit_flags(const EaqeccParams& p) {
    std::string flags;
    auto append = [&](const char* f) { flags += flags.empty() ? f : std::string(",") + f; };
    if (p.attains_ea_singleton) {
        append("ea-singleton");
    }
    if (p.is_ea_mds) {
        append("ea-mds");
    }
    if (p.is_maximal_entanglement) {
        append("max-ent");
    }
    return flags.empty() ? "-" : flags;
}

int cmd_search(std::uint64_t q, const SearchOptions& options, const Config& cfg, std::ostream& out) {
    const CodeFrame frame = CodeFrame::for_q(q);
    const auto hits = search_codes(frame, options);
    switch (cfg.fmt()) {
        case Format::Json: {
            ordered_json list = ordered_json::array();
            for (const auto& h : hits) {
                list.push_back({{"Z", h.z.values()},
                                {"cosets", h.cosets},
                                {"eaqecc", h.params.to_string()},
                                {"c", h.params.c},
                                {"attains_ea_singleton", h.params.attains_ea_singleton},
                                {"ea_mds", h.params.is_ea_mds},
                                {"max_ent", h.params.is_maximal_entanglement}});
            }
            out << list.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << kCsvHeader << "\n";
            for (const auto& h : hits) {
                out << csv_row(h.params, "search", std::nullopt, 0) << "\n";
            }
            break;
        case Format::Text:
            out << "c d code flags Z\n";
            for (const auto& h : hits) {
                out << h.params.c << ' ' << h.params.d.to_string() << ' ' << h.params.to_string() << ' '
                    << hit_flags(h.params) << ' ' << h.z.to_string() << "\n";
            }
            break;
    }
    return kExitOk;
}

int cmd_probe(std::uint64_t q, std::size_t trials, const Config& cfg, std::ostream& out) {
    const auto verdicts = random_defining_set_probe(Ambient::for_q(q), trials, cfg.seed);
    std::size_t agree = 0;
    for (const auto& v : verdicts) {
        agree += v.agrees.value_or(false) ? 1 : 0;
    }
    if (cfg.fmt() == Format::Json) {
        ordered_json j;
        j["q"] = q;
        j["trials"] = trials;
        j["seed"] = cfg.seed;
        j["agreements"] = agree;
        ordered_json failures = ordered_json::array();
        for (const auto& v : verdicts) {
            if (!v.agrees.value_or(false)) {
                failures.push_back({{"value", v.value}, {"witness", v.witness.value_or("")}});
            }
        }
        j["failures"] = failures;
        out << j.dump(2) << "\n";
    } else {
        out << "probe q=" << q << " seed=" << cfg.seed << ": " << agree << "/" << trials
            << " agree on rank(HH†) = |Z1|\n";
        for (const auto& v : verdicts) {
            if (!v.agrees.value_or(false)) {
                out << "  " << v.value << " " << v.witness.value_or("") << "\n";
            }
        }
    }
    return agree == trials ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string render_table_text(int id) {
    const TableDef def = table_def(id);
    const bool odd = def.family == Family::Odd;
    std::ostringstream os;
    os << "q " << (odd ? "m" : "e") << " [[n,k,d;c]]_q\n";
    for (const auto& r : table_rows(id)) {
        const std::uint64_t second = odd ? r.spec.m : as_prime_power(def.q)->exponent;
        os << def.q << ' ' << second << ' ' << r.params.to_string() << "\n";
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"EAQECC parameters of constacyclic codes with n = (q^2+1)/5", "eaqecc"};
    app.require_subcommand(1);
    Config cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--budget", cfg.budget, "Work budget for brute-force oracles (EAQECC_WORK_BUDGET)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for randomized probes")->capture_default_str();
        sub->add_flag("-v,--verbose", cfg.verbose, "Print full reports");
    };

    std::uint64_t q = 0;

    auto* cosets = app.add_subcommand("cosets", "List the q^2-cyclotomic cosets of omega");
    cosets->add_option("--q", q, "Field parameter q")->required();
    add_common(cosets);

    auto* family = app.add_subcommand("family", "Build and validate one family instance");
    std::string family_id;
    FamilySpec spec;
    std::string variant = "auto";
    family->add_option("--family", family_id, "even-e1, even-e3, odd, max-e1, max-e3, max-odd")
        ->required()
        ->check(CLI::IsMember({"even-e1", "even-e3", "odd", "max-e1", "max-e3", "max-odd"}));
    family->add_option("--q", q, "Field parameter q")->required();
    family->add_option("--t", spec.t, "Family parameter t")->capture_default_str();
    family->add_option("--m", spec.m, "q = 20m+3 or 20m+7 (odd families; derived when omitted)");
    family->add_option("--variant", variant, "max-odd defining set: auto, A or B")
        ->check(CLI::IsMember({"auto", "A", "B"}));
    family->add_flag("--permissive", spec.permissive, "Allow t outside the proven range");
    add_common(family);

    auto* table = app.add_subcommand("table", "Regenerate a parameter table and diff it against the golden copy");
    int table_id = 0;
    std::string golden_dir = EAQECC_DATA_DIR "/golden";
    table->add_option("--id", table_id, "Table id 1..5")->required()->check(CLI::Range(1, 5));
    table->add_option("--golden-dir", golden_dir, "Directory holding tableN.txt")->capture_default_str();
    add_common(table);

    auto* verify = app.add_subcommand("verify", "Run an oracle tier over every in-range instance for q");
    std::string level = "analytic";
    verify->add_option("--q", q, "Field parameter q")->required();
    verify->add_option("--level", level, "analytic, rank, minors or exhaustive")
        ->check(CLI::IsMember({"analytic", "rank", "minors", "exhaustive"}))
        ->capture_default_str();
    add_common(verify);

    auto* search = app.add_subcommand("search", "Enumerate defining sets and report their parameters");
    SearchOptions search_options;
    search->add_option("--q", q, "Field parameter q")->required();
    search->add_option("--max-cosets", search_options.max_cosets, "Largest number of cosets in Z");
    search->add_flag("--consecutive-only", search_options.consecutive_only, "Only cyclic intervals of omega");
    add_common(search);

    auto* probe = app.add_subcommand("probe", "Compare rank(HH†) with |Z1| on random defining sets");
    std::size_t trials = 200;
    probe->add_option("--q", q, "Field parameter q")->required();
    probe->add_option("--trials", trials, "Number of random defining sets")->capture_default_str();
    add_common(probe);

    std::vector<const char*> argv{"eaqecc"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cosets->parsed()) {
            return cmd_cosets(q, cfg, out);
        }
        if (family->parsed()) {
            spec.family = *parse_family(family_id);
            spec.q = q;
            spec.variant = variant == "A" ? Variant::A : variant == "B" ? Variant::B : Variant::Auto;
            return cmd_family(spec, cfg, out);
        }
        if (table->parsed()) {
            return cmd_table(table_id, golden_dir, cfg, out, err);
        }
        if (verify->parsed()) {
            const Level lv = level == "rank"         ? Level::Rank
                             : level == "minors"     ? Level::Minors
                             : level == "exhaustive" ? Level::Exhaustive
                                                     : Level::Analytic;
            return cmd_verify(q, lv, cfg, out);
        }
        if (search->parsed()) {
            search_options.budget = cfg.budget;
            return cmd_search(q, search_options, cfg, out);
        }
        if (probe->parsed()) {
            return cmd_probe(q, trials, cfg, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace eaqecc::cli
