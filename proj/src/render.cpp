#include "tworay/render.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <tuple>

namespace tworay {

using nlohmann::json;

Format parse_format(std::string_view name) {
    if (name == "md") return Format::Markdown;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

TableDiff diff_rows(std::span<const TableRow> computed, std::span<const TableRow> golden,
                    i64 g_min, i64 g_max) {
    const auto key = [](const TableRow& r) {
        return std::tuple(r.g, type_order(r.type), r.dc.alpha, r.dc.beta, r.d3, r.rw, r.kw3,
                          r.kwb, r.gb, r.deg_delta, r.dk2, static_cast<int>(r.subtype));
    };
    std::set<decltype(key(TableRow{}))> have;
    for (const TableRow& r : computed) have.insert(key(r));
    TableDiff diff;
    std::set<decltype(key(TableRow{}))> want;
    for (const TableRow& r : golden) {
        if (r.g < g_min || r.g > g_max) continue;
        want.insert(key(r));
        if (!have.contains(key(r))) diff.missing.push_back(r);
    }
    for (const TableRow& r : computed)
        if (!want.contains(key(r))) diff.extra.push_back(r);
    return diff;
}

namespace {

json scenario_to_json(const Scenario& s) {
    return json{{"kind", std::string(to_string(s.kind))},
                {"g_min", s.g_min},
                {"g_max", s.g_max},
                {"geometric_rules", s.geometric_rules},
                {"curated_constraints", s.curated_constraints}};
}

json opt(i64 value, bool present) { return present ? json(value) : json(nullptr); }

std::string document(json scenario, json rows, json verdict, json diff) {
    const json doc{{"scenario", std::move(scenario)},
                   {"rows", std::move(rows)},
                   {"verdict", std::move(verdict)},
                   {"diff", std::move(diff)}};
    return doc.dump(2) + "\n";
}

std::string divisor_string(DivisorClass dc) {
    std::string s = "-";
    if (dc.alpha != 1) s += std::to_string(dc.alpha);
    s += "K-";
    if (dc.beta != 1) s += std::to_string(dc.beta);
    s += "E";
    return s;
}

std::string type_label(const TableRow& r) {
    return r.subtype == Subtype::None ? std::string(to_string(r.type))
                                      : std::string(to_string(r.subtype));
}

std::string other_properties(const TableRow& r) {
    std::ostringstream os;
    switch (r.type) {
        case RayType::E1:
            os << "(r_W, -K_W^3, -K_W.B, g(B)) = (" << r.rw << ", " << r.kw3 << ", " << r.kwb
               << ", " << r.gb << ")";
            break;
        case RayType::E2:
            os << "(r_W, -K_W^3) = (" << r.rw << ", " << r.kw3 << ")";
            break;
        case RayType::C:
            os << "deg Delta = " << r.deg_delta;
            break;
        case RayType::D:
            os << "(-K)^2.D = " << r.dk2;
            break;
        default:
            break;
    }
    return os.str();
}

void csv_int(std::ostringstream& os, i64 value, bool present) {
    if (present) os << value;
}

std::string table_csv(std::span<const TableRow> rows) {
    std::ostringstream os;
    os << "g,type,alpha,beta,d3,rw,kw3,kwb,gb,deg_delta,dk2\n";
    for (const TableRow& r : rows) {
        const bool e1 = r.type == RayType::E1;
        const bool e2 = r.type == RayType::E2;
        os << r.g << ',' << type_label(r) << ',' << r.dc.alpha << ',' << r.dc.beta << ','
           << r.d3 << ',';
        csv_int(os, r.rw, e1 || e2);
        os << ',';
        csv_int(os, r.kw3, e1 || e2);
        os << ',';
        csv_int(os, r.kwb, e1);
        os << ',';
        csv_int(os, r.gb, e1);
        os << ',';
        csv_int(os, r.deg_delta, r.type == RayType::C);
        os << ',';
        csv_int(os, r.dk2, r.type == RayType::D);
        os << '\n';
    }
    return os.str();
}

std::string table_markdown(const Scenario& s, std::span<const TableRow> rows,
                           const TableDiff* diff) {
    std::ostringstream os;
    os << "## Two-ray game for " << to_string(s.kind) << "s (g in [" << s.g_min << ", "
       << s.g_max << "])\n\n";
    os << "| g | type | D | D^3 | other properties |\n";
    os << "|---|------|---|-----|------------------|\n";
    for (const TableRow& r : rows)
        os << "| " << r.g << " | " << type_label(r) << " | " << divisor_string(r.dc) << " | "
           << r.d3 << " | " << other_properties(r) << " |\n";
    os << "\n" << rows.size() << " rows\n";
    if (diff != nullptr) {
        if (diff->empty()) {
            os << "diff vs golden: none\n";
        } else {
            os << "diff vs golden: " << diff->missing.size() << " missing, "
               << diff->extra.size() << " extra\n";
            for (const TableRow& r : diff->missing)
                os << "  missing: g=" << r.g << " " << type_label(r) << " "
                   << divisor_string(r.dc) << "\n";
            for (const TableRow& r : diff->extra)
                os << "  extra:   g=" << r.g << " " << type_label(r) << " "
                   << divisor_string(r.dc) << "\n";
        }
    }
    return os.str();
}

}  // namespace

json row_to_json(const TableRow& r) {
    const bool e1 = r.type == RayType::E1;
    const bool e2 = r.type == RayType::E2;
    return json{{"g", r.g},
                {"type", std::string(to_string(r.type))},
                {"subtype", r.subtype == Subtype::None ? json(nullptr)
                                                       : json(std::string(to_string(r.subtype)))},
                {"alpha", r.dc.alpha},
                {"beta", r.dc.beta},
                {"d3", r.d3},
                {"rw", opt(r.rw, e1 || e2)},
                {"kw3", opt(r.kw3, e1 || e2)},
                {"kwb", opt(r.kwb, e1)},
                {"gb", opt(r.gb, e1)},
                {"deg_delta", opt(r.deg_delta, r.type == RayType::C)},
                {"dk2", opt(r.dk2, r.type == RayType::D)}};
}

json survivor_to_json(const SurvivorRecord& r) {
    const bool is_e1 = r.type == RayType::E1;
    return json{{"type", std::string(to_string(r.type))},
                {"g", r.g},
                {"d", r.d},
                {"h", r.h},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"gamma", opt(r.gamma, is_e1)},
                {"v", opt(r.v, is_e1)},
                {"status", r.excluded ? "excluded" : "unresolved"},
                {"rule", r.excluded ? json(std::string(to_string(r.rule))) : json(nullptr)},
                {"citation", r.excluded ? json(r.citation) : json(nullptr)}};
}

std::string render_table(const Scenario& s, std::span<const TableRow> rows,
                         const TableDiff* diff, Format f) {
    switch (f) {
        case Format::Markdown:
            return table_markdown(s, rows, diff);
        case Format::Csv:
            return table_csv(rows);
        case Format::Json: {
            json jrows = json::array();
            for (const TableRow& r : rows) jrows.push_back(row_to_json(r));
            json jdiff(nullptr);
            if (diff != nullptr) {
                json missing = json::array(), extra = json::array();
                for (const TableRow& r : diff->missing) missing.push_back(row_to_json(r));
                for (const TableRow& r : diff->extra) extra.push_back(row_to_json(r));
                jdiff = json{{"missing", std::move(missing)}, {"extra", std::move(extra)}};
            }
            return document(scenario_to_json(s), std::move(jrows), nullptr, std::move(jdiff));
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_divcont(const Scenario& s, std::span<const DivContSolution> sols,
                           bool matches_golden, Format f) {
    switch (f) {
        case Format::Markdown: {
            std::ostringstream os;
            os << "## Divisorial contractions for " << to_string(s.kind) << "s\n\n";
            os << "| g | alpha | beta |\n|---|-------|------|\n";
            for (const auto& x : sols)
                os << "| " << x.g << " | " << x.alpha << " | " << x.beta << " |\n";
            os << "\n" << sols.size() << " solutions; golden match: "
               << (matches_golden ? "yes" : "no") << "\n";
            return os.str();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "g,alpha,beta\n";
            for (const auto& x : sols) os << x.g << ',' << x.alpha << ',' << x.beta << '\n';
            return os.str();
        }
        case Format::Json: {
            json rows = json::array();
            for (const auto& x : sols)
                rows.push_back(json{{"g", x.g}, {"alpha", x.alpha}, {"beta", x.beta}});
            return document(scenario_to_json(s), std::move(rows),
                            json{{"matches_golden", matches_golden}}, nullptr);
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_defect(const Scenario& s, std::span<const DefectResult> results, Format f) {
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const DefectResult& r) { return r.mismatch; });
    switch (f) {
        case Format::Markdown: {
            std::ostringstream os;
            os << "## Flopping-curve defect for " << to_string(s.kind) << "s\n\n";
            os << "| g | type | D | assumed D^3 | table D^3 | mismatch |\n";
            os << "|---|------|---|-------------|-----------|----------|\n";
            for (const auto& r : results)
                os << "| " << r.g << " | " << to_string(r.type) << " | " << divisor_string(r.dc)
                   << " | " << r.assumed_d3 << " | " << r.table_d3 << " | "
                   << (r.mismatch ? "yes" : "NO") << " |\n";
            os << "\nE^3 = (E^+)^3 refuted on " << (all ? "all" : "NOT all") << " rows\n";
            return os.str();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "g,type,alpha,beta,assumed_d3,table_d3,mismatch\n";
            for (const auto& r : results)
                os << r.g << ',' << to_string(r.type) << ',' << r.dc.alpha << ',' << r.dc.beta
                   << ',' << r.assumed_d3 << ',' << r.table_d3 << ',' << (r.mismatch ? 1 : 0)
                   << '\n';
            return os.str();
        }
        case Format::Json: {
            json rows = json::array();
            for (const auto& r : results)
                rows.push_back(json{{"g", r.g},
                                    {"type", std::string(to_string(r.type))},
                                    {"alpha", r.dc.alpha},
                                    {"beta", r.dc.beta},
                                    {"assumed_d3", r.assumed_d3},
                                    {"table_d3", r.table_d3},
                                    {"mismatch", r.mismatch}});
            return document(scenario_to_json(s), std::move(rows),
                            json{{"all_mismatch", all}}, nullptr);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void nonfano_section_md(std::ostringstream& os, std::string_view name,
                        std::span<const SurvivorRecord> recs) {
    os << "### " << name << "\n";
    if (recs.empty()) {
        os << "empty\n\n";
        return;
    }
    for (const auto& r : recs) {
        os << "- (g,d,h,alpha,beta";
        if (r.type == RayType::E1) os << ",gamma,v";
        os << ") = (" << r.g << "," << r.d << "," << r.h << "," << r.alpha << "," << r.beta;
        if (r.type == RayType::E1) os << "," << r.gamma << "," << r.v;
        os << ") : ";
        if (r.excluded)
            os << "excluded by " << to_string(r.rule) << " [" << r.citation << "]";
        else
            os << "UNRESOLVED";
        os << "\n";
    }
    os << "\n";
}

}  // namespace

std::string render_nonfano(const Scenario& s, const Verdict& v, Format f) {
    switch (f) {
        case Format::Markdown: {
            std::ostringstream os;
            os << "## Non-Fano blowup search (g in [" << s.g_min << ", " << s.g_max << "]"
               << (s.curated_constraints ? "" : ", curated constraints off")
               << (s.geometric_rules ? "" : ", geometric rules off") << ")\n\n";
            nonfano_section_md(os, "Type E1", v.e1);
            nonfano_section_md(os, "Type C", v.type_c);
            nonfano_section_md(os, "Types E2-E5", v.type_e);
            nonfano_section_md(os, "Type D", v.type_d);
            os << "verdict: " << (v.all_excluded() ? "all survivors excluded"
                                                   : "unresolved survivors remain")
               << "\n";
            return os.str();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "section,type,g,d,h,alpha,beta,gamma,v,status,rule\n";
            const auto emit = [&os](std::string_view section,
                                    std::span<const SurvivorRecord> recs) {
                for (const auto& r : recs) {
                    os << section << ',' << to_string(r.type) << ',' << r.g << ',' << r.d << ','
                       << r.h << ',' << r.alpha << ',' << r.beta << ',';
                    if (r.type == RayType::E1) os << r.gamma;
                    os << ',';
                    if (r.type == RayType::E1) os << r.v;
                    os << ',' << (r.excluded ? "excluded" : "unresolved") << ','
                       << (r.excluded ? to_string(r.rule) : "") << '\n';
                }
            };
            emit("e1", v.e1);
            emit("type_c", v.type_c);
            emit("type_e", v.type_e);
            emit("type_d", v.type_d);
            return os.str();
        }
        case Format::Json: {
            const auto arr = [](std::span<const SurvivorRecord> recs) {
                json a = json::array();
                for (const auto& r : recs) a.push_back(survivor_to_json(r));
                return a;
            };
            json verdict{{"e1", arr(v.e1)},
                         {"type_c", arr(v.type_c)},
                         {"type_e", arr(v.type_e)},
                         {"type_d", arr(v.type_d)},
                         {"all_excluded", v.all_excluded()}};
            return document(scenario_to_json(s), nullptr, std::move(verdict), nullptr);
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_gbound(Scenario::Kind kind, i64 g_max_scanned, i64 g_max_feasible, Format f) {
    switch (f) {
        case Format::Markdown: {
            std::ostringstream os;
            os << "## Genus bound scan (" << to_string(kind) << ")\n\n";
            os << "scanned up to g = " << g_max_scanned << "; maximum feasible g = "
               << g_max_feasible << "\n";
            return os.str();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "kind,g_max_scanned,g_max_feasible\n";
            os << to_string(kind) << ',' << g_max_scanned << ',' << g_max_feasible << '\n';
            return os.str();
        }
        case Format::Json:
            return document(json{{"kind", std::string(to_string(kind))},
                                 {"g_min", kind == Scenario::Kind::PointBlowup ? 6
                                  : kind == Scenario::Kind::ConicBlowup       ? 5
                                                                              : 4},
                                 {"g_max", g_max_scanned},
                                 {"geometric_rules", true},
                                 {"curated_constraints", true}},
                            nullptr, json{{"g_max_feasible", g_max_feasible}}, nullptr);
    }
    throw std::logic_error("unreachable");
}

std::string render_checks(std::span<const CheckResult> checks, Format f) {
    const bool all = std::all_of(checks.begin(), checks.end(),
                                 [](const CheckResult& c) { return c.pass; });
    switch (f) {
        case Format::Markdown: {
            std::ostringstream os;
            for (const auto& c : checks) {
                os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) os << "  (" << c.detail << ")";
                os << "\n";
            }
            os << (all ? "verify: all checks passed" : "verify: FAILURES above") << "\n";
            return os.str();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "check,pass\n";
            for (const auto& c : checks) os << c.name << ',' << (c.pass ? 1 : 0) << '\n';
            return os.str();
        }
        case Format::Json: {
            json rows = json::array();
            for (const auto& c : checks)
                rows.push_back(json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            return document(nullptr, std::move(rows), json{{"all_pass", all}}, nullptr);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace tworay
