#include "tworay/checks.hpp"

#include <algorithm>
#include <sstream>

#include "tworay/golden.hpp"

namespace tworay {

namespace {

Scenario default_scenario(Scenario::Kind kind) {
    switch (kind) {
        case Scenario::Kind::PointBlowup: return Scenario::point();
        case Scenario::Kind::ConicBlowup: return Scenario::conic();
        case Scenario::Kind::LineBlowup: return Scenario::line();
        case Scenario::Kind::GeneralCurve: return Scenario::general_curve();
    }
    throw std::logic_error("unreachable");
}

void check_table(std::vector<CheckResult>& out, Scenario::Kind kind) {
    const Scenario s = default_scenario(kind);
    const auto rows = flop_table(s);
    const TableDiff diff = diff_rows(rows, golden::table(kind), s.g_min, s.g_max);
    std::ostringstream detail;
    detail << rows.size() << " rows";
    if (!diff.empty())
        detail << "; " << diff.missing.size() << " missing, " << diff.extra.size() << " extra";
    out.push_back({"tables/" + std::string(to_string(kind)), diff.empty(), detail.str()});
}

void check_divcont(std::vector<CheckResult>& out, Scenario::Kind kind) {
    const Scenario s = default_scenario(kind);
    const auto sols = divcont_solutions(s);
    const auto want = golden::divcont(kind);
    const bool pass = std::equal(sols.begin(), sols.end(), want.begin(), want.end());
    out.push_back({"divcont/" + std::string(to_string(kind)), pass,
                   std::to_string(sols.size()) + " solutions"});
}

void check_parity(std::vector<CheckResult>& out) {
    // Every beta = 1 point solution has odd omega_D^2.
    bool point_ok = true;
    std::ostringstream pd;
    for (const auto& sol : divcont_solutions(Scenario::point())) {
        if (sol.beta != 1) continue;
        const ParityWitness w = divcont_parity_witness(Scenario::point(), sol);
        pd << "(" << sol.g << "," << sol.alpha << ",1)->" << w.omega_sq << " ";
        if (w.obstruction != ParityObstruction::OddVsEven) point_ok = false;
    }
    out.push_back({"parity/point", point_ok, pd.str()});

    // Conic (6,1,1) yields omega_D^2 = -2, not divisible by 4.
    const ParityWitness w = divcont_parity_witness(Scenario::conic(), {6, 1, 1});
    out.push_back({"parity/conic", w.omega_sq == -2 && w.obstruction == ParityObstruction::NotDiv4,
                   "(6,1,1)->" + std::to_string(w.omega_sq)});
}

void check_defect(std::vector<CheckResult>& out, Scenario::Kind kind) {
    const Scenario s = default_scenario(kind);
    const auto rows = flop_table(s);
    bool all = !rows.empty();
    for (const TableRow& row : rows)
        if (!defect_check(s, row).mismatch) all = false;

    // Spot values.
    bool spots = true;
    if (kind == Scenario::Kind::PointBlowup) {
        const DefectResult r = defect_check(s, {7, RayType::E2, Subtype::None, {2, 1}, 1});
        spots = r.assumed_d3 == -29 && r.table_d3 == 1;
    } else if (kind == Scenario::Kind::LineBlowup) {
        const DefectResult r = defect_check(s, {12, RayType::E1, Subtype::None, {1, 2}, -8});
        spots = r.assumed_d3 == -32 && r.table_d3 == -8;
    }
    out.push_back({"defect/" + std::string(to_string(kind)), all && spots,
                   std::to_string(rows.size()) + " rows all mismatch"});
}

bool same_set(std::span<const SurvivorRecord> got, std::span<const SurvivorRecord> want) {
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < got.size(); ++i) {
        const auto& a = got[i];
        const auto& b = want[i];
        if (a.g != b.g || a.d != b.d || a.h != b.h || a.alpha != b.alpha || a.beta != b.beta)
            return false;
    }
    return true;
}

void check_nonfano(std::vector<CheckResult>& out) {
    const golden::NonFanoExpectation want = golden::nonfano();

    const Verdict v = nonfano_search(Scenario::general_curve());
    const auto& u = want.e1_unique;
    const bool e1_ok = v.e1.size() == 1 && v.e1[0].g == u.g && v.e1[0].d == u.d &&
                       v.e1[0].h == u.h && v.e1[0].beta == u.beta && v.e1[0].gamma == u.gamma &&
                       v.e1[0].v == u.v;
    out.push_back({"nonfano/e1-unique", e1_ok, "expect (8,4,1,2,2,4)"});
    out.push_back({"nonfano/type-c-empty", v.type_c.empty(),
                   std::to_string(v.type_c.size()) + " candidates"});
    out.push_back({"nonfano/type-e-empty", v.type_e.empty(),
                   std::to_string(v.type_e.size()) + " candidates"});
    out.push_back({"nonfano/type-d-curated", same_set(v.type_d, want.d_curated),
                   std::to_string(v.type_d.size()) + " candidates"});

    Scenario raw = Scenario::general_curve();
    raw.curated_constraints = false;
    const Verdict vr = nonfano_search(raw);
    out.push_back({"nonfano/type-d-raw", same_set(vr.type_d, want.d_raw),
                   std::to_string(vr.type_d.size()) + " candidates"});

    bool cited = v.all_excluded() && vr.all_excluded();
    for (const auto* vec : {&v.e1, &v.type_d, &vr.e1, &vr.type_d})
        for (const auto& r : *vec)
            if (r.citation.empty()) cited = false;
    out.push_back({"nonfano/all-excluded", cited, "every survivor carries a rule citation"});
}

void check_gbound(std::vector<CheckResult>& out) {
    const i64 g13 = gbound_scan(13);
    const i64 g40 = gbound_scan(40);
    out.push_back({"gbound/conic", g13 == 12 && g40 == 12,
                   "max feasible g = " + std::to_string(g40)});
    const i64 p = gbound_scan(60, Scenario::Kind::PointBlowup);
    out.push_back({"gbound/point", p == 13, "max feasible g = " + std::to_string(p)});
}

void check_rr(std::vector<CheckResult>& out) {
    bool ok = true;
    for (i64 g = 3; g <= 12; ++g)
        if (rr_h0(g, 1) != g + 2) ok = false;
    ok = ok && rr_h0(4, 2) == 20 && rr_h0(4, 3) == 49 && rr_h0(5, 2) == 25;
    out.push_back({"riemann-roch", ok, "h0(-K) = g+2; instances 20, 49, 25"});
}

void check_identity(std::vector<CheckResult>& out) {
    out.push_back({"identity-sweep", identity_sweep(),
                   "g in [6,12], d in [1,19], h in [0,10], alpha,beta in [1,8]"});
}

void check_stability(std::vector<CheckResult>& out, int scale) {
    for (StabilityTarget t : all_stability_targets())
        out.push_back({"bound-stability/" + std::string(to_string(t)), bound_stability(t, scale),
                       "scale " + std::to_string(scale)});
}

void check_determinism(std::vector<CheckResult>& out) {
    bool ok = true;
    for (Scenario::Kind kind : {Scenario::Kind::PointBlowup, Scenario::Kind::ConicBlowup,
                                Scenario::Kind::LineBlowup}) {
        const Scenario s = default_scenario(kind);
        const auto single = flop_table(s, 1, 1);
        const auto sliced = flop_table(s, 1, 8);
        if (single != sliced) ok = false;
        const TableDiff d1 = diff_rows(single, golden::table(kind), s.g_min, s.g_max);
        const TableDiff d2 = diff_rows(sliced, golden::table(kind), s.g_min, s.g_max);
        if (render_table(s, single, &d1, Format::Json) !=
            render_table(s, sliced, &d2, Format::Json))
            ok = false;
    }
    out.push_back({"determinism", ok, "parallel slicing = single thread, byte-identical"});
}

}  // namespace

std::vector<CheckResult> run_verify_checks(int bounds_scale) {
    std::vector<CheckResult> out;
    check_table(out, Scenario::Kind::PointBlowup);
    check_table(out, Scenario::Kind::ConicBlowup);
    check_table(out, Scenario::Kind::LineBlowup);
    check_divcont(out, Scenario::Kind::PointBlowup);
    check_divcont(out, Scenario::Kind::ConicBlowup);
    check_divcont(out, Scenario::Kind::LineBlowup);
    check_parity(out);
    check_defect(out, Scenario::Kind::PointBlowup);
    check_defect(out, Scenario::Kind::ConicBlowup);
    check_defect(out, Scenario::Kind::LineBlowup);
    check_identity(out);
    check_nonfano(out);
    check_gbound(out);
    check_rr(out);
    check_stability(out, std::max(bounds_scale, 2));
    check_determinism(out);
    return out;
}

}  // namespace tworay
