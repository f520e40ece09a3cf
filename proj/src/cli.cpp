#include "tworay/cli.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "tworay/checks.hpp"
#include "tworay/golden.hpp"

namespace tworay::cli {

namespace {

Scenario make_scenario(Scenario::Kind kind, const GlobalOptions& opts) {
    Scenario s;
    switch (kind) {
        case Scenario::Kind::PointBlowup: s = Scenario::point(); break;
        case Scenario::Kind::ConicBlowup: s = Scenario::conic(); break;
        case Scenario::Kind::LineBlowup: s = Scenario::line(); break;
        case Scenario::Kind::GeneralCurve: s = Scenario::general_curve(); break;
    }
    if (opts.g_min) s.g_min = std::max(*opts.g_min, s.g_min);
    if (opts.g_max) s.g_max = *opts.g_max;
    s.geometric_rules = !opts.no_geometric;
    s.curated_constraints = !opts.no_curated;
    return s;
}

unsigned default_slices() {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 8u);
}

}  // namespace

Scenario::Kind parse_kind(std::string_view name) {
    if (name == "point") return Scenario::Kind::PointBlowup;
    if (name == "conic") return Scenario::Kind::ConicBlowup;
    if (name == "line") return Scenario::Kind::LineBlowup;
    throw std::invalid_argument("unknown scenario: " + std::string(name));
}

int cmd_tables(Scenario::Kind kind, const GlobalOptions& opts, bool emit_golden,
               std::ostream& out) {
    const Scenario s = make_scenario(kind, opts);
    if (emit_golden) {
        const auto all = golden::table(kind);
        std::vector<TableRow> rows;
        for (const TableRow& r : all)
            if (s.g_min <= r.g && r.g <= s.g_max) rows.push_back(r);
        out << render_table(s, rows, nullptr, opts.format);
        return kPass;
    }
    const auto rows = flop_table(s, 1, default_slices());
    if (!s.geometric_rules) {
        // Raw arithmetic-feasible superset; the golden diff does not apply.
        out << render_table(s, rows, nullptr, opts.format);
        return kPass;
    }
    const TableDiff diff = diff_rows(rows, golden::table(kind), s.g_min, s.g_max);
    out << render_table(s, rows, &diff, opts.format);
    return diff.empty() ? kPass : kFail;
}

int cmd_divcont(Scenario::Kind kind, const GlobalOptions& opts, std::ostream& out) {
    const Scenario s = make_scenario(kind, opts);
    const auto sols = divcont_solutions(s);
    std::vector<DivContSolution> want;
    for (const DivContSolution& x : golden::divcont(kind))
        if (s.g_min <= x.g && x.g <= s.g_max) want.push_back(x);
    const bool match = sols.size() == want.size() &&
                       std::is_permutation(sols.begin(), sols.end(), want.begin());
    out << render_divcont(s, sols, match, opts.format);
    return match ? kPass : kFail;
}

int cmd_defect(Scenario::Kind kind, const GlobalOptions& opts, std::ostream& out) {
    const Scenario s = make_scenario(kind, opts);
    std::vector<DefectResult> results;
    for (const TableRow& row : flop_table(s, 1, default_slices()))
        results.push_back(defect_check(s, row));
    out << render_defect(s, results, opts.format);
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const DefectResult& r) { return r.mismatch; });
    return all ? kPass : kFail;
}

int cmd_nonfano(const GlobalOptions& opts, std::ostream& out) {
    const Scenario s = make_scenario(Scenario::Kind::GeneralCurve, opts);
    const Verdict v = nonfano_search(s);
    out << render_nonfano(s, v, opts.format);
    return v.all_excluded() ? kPass : kFail;
}

int cmd_gbound(i64 g_max, const GlobalOptions& opts, std::ostream& out) {
    const i64 feasible = gbound_scan(g_max);
    out << render_gbound(Scenario::Kind::ConicBlowup, g_max, feasible, opts.format);
    return feasible == 12 ? kPass : kFail;
}

int cmd_verify(int bounds_scale, const GlobalOptions& opts, std::ostream& out) {
    const auto checks = run_verify_checks(bounds_scale);
    out << render_checks(checks, opts.format);
    const auto fail = std::find_if(checks.begin(), checks.end(),
                                   [](const CheckResult& c) { return !c.pass; });
    if (fail == checks.end()) return kPass;
    if (opts.format != Format::Markdown) {
        // The failing check is already named in the structured output.
        return kFail;
    }
    out << "first failing check: " << fail->name << "\n";
    return kFail;
}

}  // namespace tworay::cli
