#include <doctest.h>

#include <algorithm>

#include "tworay/engine.hpp"
#include "tworay/golden.hpp"

using namespace tworay;

namespace {

std::vector<TableRow> golden_vec(Scenario::Kind kind) {
    const auto span = golden::table(kind);
    return {span.begin(), span.end()};
}

}  // namespace

TEST_CASE("scenario invariants and the conic genus shift") {
    const Scenario conic = Scenario::conic();
    for (i64 g = 5; g <= 40; ++g) {
        const YInvariants inv = conic.invariants(g);
        const YInvariants shifted = blowup_invariants(g + 1, Center::point());
        CHECK(inv.i3 == shifted.i3);
        CHECK(inv.i2 == shifted.i2);
        CHECK(inv.i1 == shifted.i1);
        CHECK(inv.e3 == 0);
        CHECK(inv == blowup_invariants(g, Center::curve(2, 0)));
    }
    CHECK(Scenario::point().w_max() == 12);
    CHECK(Scenario::conic().w_max() == 11);
    CHECK(Scenario::line().w_max() == 11);
    CHECK(Scenario::point().lower_bound(12) == 4);
    CHECK(Scenario::conic().lower_bound(9) == 2);
    CHECK(Scenario::line().lower_bound(6) == 1);
}

TEST_CASE("flop tables reproduce the golden rows exactly") {
    CHECK(flop_table(Scenario::point()) == golden_vec(Scenario::Kind::PointBlowup));
    CHECK(flop_table(Scenario::conic()) == golden_vec(Scenario::Kind::ConicBlowup));
    CHECK(flop_table(Scenario::line()) == golden_vec(Scenario::Kind::LineBlowup));

    // Lines restricted to g = 4: the four E1 rows.
    const auto g4 = flop_table(Scenario::line(4, 4));
    REQUIRE(g4.size() == 4);
    for (const TableRow& r : g4) {
        CHECK(r.g == 4);
        CHECK(r.type == RayType::E1);
    }
    CHECK(g4[0].kw3 == 6);
    CHECK(g4[1].kw3 == 18);
    CHECK(g4[2].kw3 == 24);
    CHECK(g4[3].kw3 == 54);

    // Beyond the genus bound: nothing.
    CHECK(flop_table(Scenario::conic(13, 40)).empty());
    CHECK(flop_table(Scenario::point(14, 40)).empty());

    CHECK_THROWS_AS(flop_table(Scenario::general_curve()), std::invalid_argument);
    CHECK_THROWS_AS(flop_table(Scenario::point(4, 10)), std::invalid_argument);
}

TEST_CASE("emitted rows re-validate against their signature via triple_product") {
    for (Scenario::Kind kind : {Scenario::Kind::PointBlowup, Scenario::Kind::ConicBlowup,
                                Scenario::Kind::LineBlowup}) {
        Scenario s;
        switch (kind) {
            case Scenario::Kind::PointBlowup: s = Scenario::point(); break;
            case Scenario::Kind::ConicBlowup: s = Scenario::conic(); break;
            default: s = Scenario::line(); break;
        }
        for (const TableRow& r : flop_table(s)) {
            const YInvariants inv = s.invariants(r.g);
            const i64 a = r.dc.alpha, b = r.dc.beta;
            const i64 d2k = triple_product(inv, {a, -b}, {a, -b}, {1, 0});
            const i64 dk2 = triple_product(inv, {a, -b}, {1, 0}, {1, 0});
            switch (r.type) {
                case RayType::C:
                    CHECK(d2k == 2);
                    CHECK(r.deg_delta == 12 - dk2);
                    CHECK(r.deg_delta >= 0);
                    break;
                case RayType::D:
                    CHECK(d2k == 0);
                    CHECK(r.dk2 == dk2);
                    CHECK((1 <= dk2 && dk2 <= 9));
                    break;
                case RayType::E2:
                    CHECK(d2k == -2);
                    CHECK(dk2 == 4);
                    CHECK(r.kw3 == inv.i3 + 8);
                    break;
                case RayType::E1: {
                    CHECK((a + 1) % b == 0);
                    CHECK(r.kw3 == triple_product(inv, {a + 1, -b}, {a + 1, -b}, {1, 0}));
                    CHECK(r.kwb == triple_product(inv, {a, -b}, {a + 1, -b}, {1, 0}));
                    CHECK(2 * r.gb - 2 == d2k);
                    CHECK(r.d3 == r.kw3 - inv.i3 - 3 * r.kwb);
                    // Feasibility filters hold on every emitted row.
                    CHECK(r.gb >= 0);
                    CHECK(r.kwb >= 1);
                    CHECK(r.kw3 >= 1);
                    break;
                }
                default:
                    FAIL("unexpected ray type in a table row");
            }
        }
    }
}

TEST_CASE("flop_table is deterministic, sorted, duplicate-free, slice-independent") {
    const Scenario s = Scenario::point();
    const auto once = flop_table(s);
    CHECK(once == flop_table(s));
    for (unsigned slices : {2u, 3u, 8u, 64u}) CHECK(once == flop_table(s, 1, slices));
    CHECK(std::is_sorted(once.begin(), once.end(), row_less));
    CHECK(std::adjacent_find(once.begin(), once.end()) == once.end());
}

TEST_CASE("raw arithmetic superset: geometric rules add rows back") {
    Scenario s = Scenario::point();
    s.geometric_rules = false;
    const auto raw = flop_table(s);
    // (10, E1, (1,1)) is arithmetic-feasible but pruned by R1.
    const auto has = [&raw](i64 g, RayType t, i64 a, i64 b) {
        return std::any_of(raw.begin(), raw.end(), [&](const TableRow& r) {
            return r.g == g && r.type == t && r.dc.alpha == a && r.dc.beta == b;
        });
    };
    CHECK(raw.size() > 15);
    CHECK(has(10, RayType::E1, 1, 1));
}

TEST_CASE("line g=5 E1 candidates (3,2) and (1,1) die on the g(B) filter, not on rules") {
    Scenario s = Scenario::line(5, 5);
    s.geometric_rules = false;
    const auto raw = flop_table(s);
    REQUIRE(raw.size() == 2);  // the C row and the (2,1) E1 row only
    CHECK(raw[0].type == RayType::C);
    CHECK(raw[1].type == RayType::E1);
    CHECK(raw[1].dc == DivisorClass{2, 1});
    // The would-be targets have 2g(B) - 2 < -2.
    const YInvariants inv = s.invariants(5);
    CHECK(e1_derived(inv, {3, 2}).two_gb_minus_2 == -8);
    CHECK(e1_derived(inv, {1, 1}).two_gb_minus_2 == -4);
}

TEST_CASE("divisorial contraction solutions") {
    using V = std::vector<DivContSolution>;
    CHECK(divcont_solutions(Scenario::point()) ==
          V{{6, 2, 1}, {7, 1, 1}, {6, 4, 2}, {7, 2, 2}, {9, 1, 2}});
    CHECK(divcont_solutions(Scenario::conic()) ==
          V{{5, 2, 1}, {6, 1, 1}, {5, 4, 2}, {6, 2, 2}, {8, 1, 2}});
    CHECK(divcont_solutions(Scenario::line()) == V{{4, 3, 2}, {6, 1, 2}});
    CHECK(divcont_solutions(Scenario::conic(9, 12)).empty());
}

TEST_CASE("divisorial contraction parity witnesses") {
    const ParityWitness a = divcont_parity_witness(Scenario::point(), {6, 2, 1});
    CHECK(a.omega_sq == -25);
    CHECK(a.obstruction == ParityObstruction::OddVsEven);

    const ParityWitness b = divcont_parity_witness(Scenario::conic(), {6, 1, 1});
    CHECK(b.omega_sq == -2);
    CHECK(b.obstruction == ParityObstruction::NotDiv4);

    const ParityWitness c = divcont_parity_witness(Scenario::point(), {7, 1, 1});
    CHECK(c.omega_sq % 2 != 0);
    CHECK(c.obstruction == ParityObstruction::OddVsEven);

    CHECK_THROWS_AS(divcont_parity_witness(Scenario::point(), {6, 4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(divcont_parity_witness(Scenario::point(), {8, 1, 1}), std::invalid_argument);
}

TEST_CASE("defect: E^3 = (E^+)^3 fails on every row") {
    struct Spot {
        Scenario s;
        TableRow row;
        i64 assumed;
    };
    const Spot spots[] = {
        {Scenario::point(), {7, RayType::E2, Subtype::None, {2, 1}, 1}, -29},
        {Scenario::line(), {12, RayType::E1, Subtype::None, {1, 2}, -8}, -32},
        {Scenario::conic(), {7, RayType::E1, Subtype::None, {3, 2}, -6}, -126},
    };
    for (const Spot& spot : spots) {
        const DefectResult r = defect_check(spot.s, spot.row);
        CHECK(r.assumed_d3 == spot.assumed);
        CHECK(r.table_d3 == spot.row.d3);
        CHECK(r.mismatch);
    }

    for (Scenario::Kind kind : {Scenario::Kind::PointBlowup, Scenario::Kind::ConicBlowup,
                                Scenario::Kind::LineBlowup}) {
        Scenario s;
        switch (kind) {
            case Scenario::Kind::PointBlowup: s = Scenario::point(); break;
            case Scenario::Kind::ConicBlowup: s = Scenario::conic(); break;
            default: s = Scenario::line(); break;
        }
        const auto rows = flop_table(s);
        CHECK_FALSE(rows.empty());
        for (const TableRow& row : rows) CHECK(defect_check(s, row).mismatch);
    }
}

TEST_CASE("non-Fano search: the four sub-searches") {
    const Verdict v = nonfano_search(Scenario::general_curve());

    REQUIRE(v.e1.size() == 1);
    const SurvivorRecord& u = v.e1[0];
    CHECK(u.g == 8);
    CHECK(u.d == 4);
    CHECK(u.h == 1);
    CHECK(u.beta == 2);
    CHECK(u.gamma == 2);
    CHECK(u.v == 4);
    CHECK(u.alpha == 3);
    CHECK(u.excluded);
    CHECK(u.rule == RuleId::R2);

    CHECK(v.type_c.empty());
    CHECK(v.type_e.empty());

    REQUIRE(v.type_d.size() == 2);
    CHECK(v.type_d[0].g == 9);
    CHECK(v.type_d[1].g == 11);
    for (const SurvivorRecord& r : v.type_d) {
        CHECK(r.alpha == 1);
        CHECK(r.beta == 1);
        CHECK(r.h == 1);
        CHECK(r.excluded);
        CHECK(r.rule == RuleId::R3);
        CHECK_FALSE(r.citation.empty());
    }
    CHECK(v.all_excluded());
    CHECK(v.unresolved().empty());

    // Index-divisibility consequence on the feasible tuple:
    // (beta^2-1)d + (beta+1)^2 (2h-2) lies in alpha Z.
    CHECK(((u.beta * u.beta - 1) * u.d + (u.beta + 1) * (u.beta + 1) * (2 * u.h - 2)) % u.alpha ==
          0);
}

TEST_CASE("non-Fano search: curated constraints and geometric rules off") {
    Scenario raw = Scenario::general_curve();
    raw.curated_constraints = false;
    const Verdict vr = nonfano_search(raw);
    REQUIRE(vr.type_d.size() == 3);
    CHECK(vr.type_d[0].g == 7);
    CHECK(vr.type_d[0].d == 3);
    CHECK(vr.type_d[0].h == 1);
    CHECK(vr.all_excluded());  // R3 also covers (7,3,1,1,1)

    Scenario loose = Scenario::general_curve();
    loose.curated_constraints = false;
    loose.geometric_rules = false;
    const Verdict vl = nonfano_search(loose);
    CHECK_FALSE(vl.all_excluded());
    CHECK(vl.unresolved().size() == 4);  // one E1 + three type-D survivors
}

TEST_CASE("genus bound scan is monotone-stable") {
    for (i64 g_max : {i64{13}, i64{20}, i64{40}, i64{60}}) CHECK(gbound_scan(g_max) == 12);
    CHECK(gbound_scan(60, Scenario::Kind::PointBlowup) == 13);
    CHECK(gbound_scan(13, Scenario::Kind::PointBlowup) == 13);
    CHECK_THROWS_AS(gbound_scan(12), std::invalid_argument);
}

TEST_CASE("bound stability at scale 2 and 3") {
    for (StabilityTarget t : all_stability_targets()) {
        CHECK(bound_stability(t, 2));
        CHECK(bound_stability(t, 3));
    }
    CHECK_THROWS_AS(bound_stability(StabilityTarget::PointTable, 9), std::invalid_argument);
}

TEST_CASE("identity sweep") {
    CHECK(identity_sweep());
    // Single instance (g,d,h,alpha,beta) = (8,4,1,3,2): both sides equal -40.
    const YInvariants inv = blowup_invariants(8, Center::curve(4, 1));
    const DTriple t32 = d_intersections(inv, {3, 2});
    CHECK(-t32.d2k * 3 + t32.d3 == -40);
    CHECK(4 * 2 * (2 - 3) * (3 + 2) + (2 * 1 - 2) * 2 * 5 * 5 == -40);
    // Degenerate slice: h = 1 and alpha = beta makes the right side vanish.
    const DTriple t33 = d_intersections(inv, {3, 3});
    CHECK(-t33.d2k * 3 + t33.d3 == 0);
}
