// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// non-zero exit on any failure. Total runtime stays far below a minute.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

#include "tworay/checks.hpp"
#include "tworay/cli.hpp"
#include "tworay/golden.hpp"

#include <sstream>

using namespace tworay;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass) {
    std::printf("criterion %2d  %-34s %s\n", id, name, pass ? "PASS" : "FAIL");
    if (!pass) ++failures;
}

bool table_matches(Scenario::Kind kind, const Scenario& s) {
    const auto rows = flop_table(s);
    const auto want = golden::table(kind);
    if (rows.size() != want.size()) return false;
    std::set<std::string> a, b;
    // Set equality of all fields: serialize each row canonically.
    const auto key = [](const TableRow& r) {
        std::ostringstream os;
        os << r.g << '|' << to_string(r.type) << '|' << to_string(r.subtype) << '|' << r.dc.alpha
           << '|' << r.dc.beta << '|' << r.d3 << '|' << r.rw << '|' << r.kw3 << '|' << r.kwb
           << '|' << r.gb << '|' << r.deg_delta << '|' << r.dk2;
        return os.str();
    };
    for (const TableRow& r : rows) a.insert(key(r));
    for (const TableRow& r : want) b.insert(key(r));
    return a == b;
}

template <typename T>
bool set_eq(const std::vector<T>& got, const std::vector<T>& want) {
    if (got.size() != want.size()) return false;
    for (const T& x : want)
        if (std::find(got.begin(), got.end(), x) == got.end()) return false;
    return true;
}

}  // namespace

int main() {
    // 1. Points table over g in [6,40]: the 15 golden rows, nothing above 13.
    {
        const bool exact = table_matches(Scenario::Kind::PointBlowup, Scenario::point(6, 40));
        bool max_g_ok = true;
        for (const TableRow& r : flop_table(Scenario::point(6, 40)))
            if (r.g > 13) max_g_ok = false;
        report(1, "points table (15 rows, g <= 13)", exact && max_g_ok);
    }

    // 2. Conics table over g in [5,40]: 15 rows, maximum feasible g = 12.
    {
        const auto rows = flop_table(Scenario::conic(5, 40));
        i64 max_g = 0;
        for (const TableRow& r : rows) max_g = std::max(max_g, r.g);
        report(2, "conics table (15 rows, max g = 12)",
               table_matches(Scenario::Kind::ConicBlowup, Scenario::conic(5, 40)) && max_g == 12);
    }

    // 3. Lines table over g in [4,12]: 12 rows; g=5 row is C1 with deg Delta 7.
    {
        const auto rows = flop_table(Scenario::line(4, 12));
        bool c_row = false;
        for (const TableRow& r : rows)
            if (r.g == 5 && r.type == RayType::C && r.subtype == Subtype::C1 && r.deg_delta == 7)
                c_row = true;
        report(3, "lines table (12 rows, g=5 C1 row)",
               table_matches(Scenario::Kind::LineBlowup, Scenario::line(4, 12)) && c_row);
    }

    // 4. Divisorial contraction solution lists.
    {
        using V = std::vector<DivContSolution>;
        const bool ok =
            set_eq(divcont_solutions(Scenario::point()),
                   V{{6, 2, 1}, {7, 1, 1}, {6, 4, 2}, {7, 2, 2}, {9, 1, 2}}) &&
            set_eq(divcont_solutions(Scenario::conic()),
                   V{{5, 2, 1}, {6, 1, 1}, {5, 4, 2}, {6, 2, 2}, {8, 1, 2}}) &&
            set_eq(divcont_solutions(Scenario::line()), V{{4, 3, 2}, {6, 1, 2}});
        report(4, "divisorial contraction lists", ok);
    }

    // 5. Parity obstructions.
    {
        bool ok = true;
        for (const auto& sol : divcont_solutions(Scenario::point())) {
            if (sol.beta != 1) continue;
            if (divcont_parity_witness(Scenario::point(), sol).omega_sq % 2 == 0) ok = false;
        }
        const ParityWitness w = divcont_parity_witness(Scenario::conic(), {6, 1, 1});
        ok = ok && w.omega_sq == -2 && w.obstruction == ParityObstruction::NotDiv4;
        report(5, "parity obstructions", ok);
    }

    // 6. Defect on 100% of rows; spot values.
    {
        bool ok = true;
        for (auto [kind, s] : {std::pair{Scenario::Kind::PointBlowup, Scenario::point()},
                               {Scenario::Kind::ConicBlowup, Scenario::conic()},
                               {Scenario::Kind::LineBlowup, Scenario::line()}}) {
            const auto rows = flop_table(s);
            if (rows.empty()) ok = false;
            for (const TableRow& r : rows)
                if (!defect_check(s, r).mismatch) ok = false;
        }
        const DefectResult p =
            defect_check(Scenario::point(), {7, RayType::E2, Subtype::None, {2, 1}, 1});
        const DefectResult l =
            defect_check(Scenario::line(), {12, RayType::E1, Subtype::None, {1, 2}, -8});
        ok = ok && p.assumed_d3 == -29 && p.table_d3 == 1 && l.assumed_d3 == -32 &&
             l.table_d3 == -8;
        report(6, "flopping-curve defect", ok);
    }

    // 7. Non-Fano search.
    {
        const Verdict v = nonfano_search(Scenario::general_curve());
        Scenario raw_s = Scenario::general_curve();
        raw_s.curated_constraints = false;
        const Verdict vr = nonfano_search(raw_s);
        bool ok = v.e1.size() == 1;
        if (ok) {
            const auto& u = v.e1[0];
            ok = u.g == 8 && u.d == 4 && u.h == 1 && u.beta == 2 && u.gamma == 2 && u.v == 4;
        }
        ok = ok && v.type_c.empty() && v.type_e.empty();
        ok = ok && vr.type_d.size() == 3 && vr.type_d[0].g == 7 && vr.type_d[0].d == 3 &&
             vr.type_d[1].g == 9 && vr.type_d[1].d == 4 && vr.type_d[2].g == 11 &&
             vr.type_d[2].d == 5;
        ok = ok && v.type_d.size() == 2 && v.all_excluded();
        for (const auto* vec : {&v.e1, &v.type_d})
            for (const auto& r : *vec)
                if (!r.excluded || r.citation.empty()) ok = false;
        report(7, "non-Fano blowup search", ok);
    }

    // 8. Identity sweep on the full grid, under a second.
    {
        const auto start = std::chrono::steady_clock::now();
        const bool ok = identity_sweep();
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report(8, "identity sweep (< 1 s)",
               ok && elapsed < std::chrono::seconds(1));
    }

    // 9. Riemann-Roch instances.
    {
        bool ok = rr_h0(4, 2) == 20 && rr_h0(4, 3) == 49 && rr_h0(5, 2) == 25;
        for (i64 g = 3; g <= 12; ++g)
            if (rr_h0(g, 1) != g + 2) ok = false;
        report(9, "Riemann-Roch counts", ok);
    }

    // 10. Bound stability at scale 2, under a minute.
    {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (StabilityTarget t : all_stability_targets())
            if (!bound_stability(t, 2)) ok = false;
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report(10, "bound stability at scale 2 (< 60 s)",
               ok && elapsed < std::chrono::seconds(60));
    }

    // 11. Determinism: byte-identical repeated verify documents; parallel
    //     and single-threaded enumerations agree.
    {
        cli::GlobalOptions opts;
        opts.format = Format::Json;
        std::ostringstream a, b;
        const int ra = cli::cmd_verify(1, opts, a);
        const int rb = cli::cmd_verify(1, opts, b);
        bool ok = ra == 0 && rb == 0 && a.str() == b.str();
        for (auto s : {Scenario::point(), Scenario::conic(), Scenario::line()})
            if (flop_table(s, 1, 1) != flop_table(s, 1, 8)) ok = false;
        report(11, "determinism", ok);
    }

    if (failures > 0) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
