#pragma once

#include <string>
#include <vector>

#include "tworay/raytypes.hpp"

namespace tworay {

/// A bounded enumeration scenario: which centre is blown up, the genus range,
/// and which curated/geometric rule sets are active.
struct Scenario {
    enum class Kind { PointBlowup, ConicBlowup, LineBlowup, GeneralCurve };

    Kind kind = Kind::PointBlowup;
    i64 g_min = 6;
    i64 g_max = 40;
    bool geometric_rules = true;     // prune rules R1-R3
    bool curated_constraints = true; // GeneralCurve only: d >= 3, and h >= 1 => d >= 4

    static Scenario point(i64 g_min = 6, i64 g_max = 40);
    static Scenario conic(i64 g_min = 5, i64 g_max = 40);
    static Scenario line(i64 g_min = 4, i64 g_max = 12);
    static Scenario general_curve(i64 g_min = 6, i64 g_max = 12);

    /// Blowup centre (point / conic / line); invalid for GeneralCurve.
    Center center() const;

    /// Flop-invariant quadruple used on Y+. The conic scenario computes the
    /// point quadruple at the shifted genus g+1 (with the conic E^3 = 0);
    /// this equals blowup_invariants(g, curve(2,0)), which is asserted.
    YInvariants invariants(i64 g) const;

    /// Scenario w bound: 12 for points, 11 for conics and lines.
    i64 w_max() const;

    /// h^0(Y, -K_Y - E) lower bound: g-8 / g-7 / g-5.
    i64 lower_bound(i64 g) const;
};

std::string_view to_string(Scenario::Kind k);

/// One classified two-ray-game outcome.
struct TableRow {
    i64 g = 0;
    RayType type = RayType::E1;
    Subtype subtype = Subtype::None;
    DivisorClass dc;
    i64 d3 = 0;  // D^3 on Y+

    // E1 payload: (r_W, (-K_W)^3, (-K_W).B, g(B)); E2 payload: (r_W, (-K_W)^3).
    i64 rw = 0;
    i64 kw3 = 0;
    i64 kwb = 0;
    i64 gb = 0;
    // C payload: deg Delta; D payload: D.(-K)^2.
    i64 deg_delta = 0;
    i64 dk2 = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

bool row_less(const TableRow& a, const TableRow& b);

/// Enumerate the two-ray-game table for a point / conic / line scenario.
/// Deterministic, canonically sorted by (g, type order, alpha, beta),
/// duplicate-free, and independent of `slices` (the g range is split into
/// that many chunks enumerated concurrently). `bound_scale` multiplies every
/// engine-derived loop cap; the published constraints are unaffected.
std::vector<TableRow> flop_table(const Scenario& s, int bound_scale = 1, unsigned slices = 1);

struct DivContSolution {
    i64 g = 0;
    i64 alpha = 0;
    i64 beta = 0;

    friend bool operator==(const DivContSolution&, const DivContSolution&) = default;
};

/// All (g, alpha, beta) with alpha*(-K_Y)^3 = beta*(-K_Y)^2.E, beta in {1,2},
/// over the scenario's genus range; ordered by (beta, g, alpha).
std::vector<DivContSolution> divcont_solutions(const Scenario& s);

enum class ParityObstruction { OddVsEven, NotDiv4, None };

std::string_view to_string(ParityObstruction o);

struct ParityWitness {
    i64 omega_sq = 0;
    ParityObstruction obstruction = ParityObstruction::None;
};

/// omega_D^2 for a beta = 1 divisorial-contraction solution, classified
/// against omega_D^2 in 4Z: odd -> OddVsEven, even but not 0 mod 4 ->
/// NotDiv4, else None. Rejects beta != 1.
ParityWitness divcont_parity_witness(const Scenario& s, const DivContSolution& sol);

struct DefectResult {
    i64 g = 0;
    RayType type = RayType::E1;
    DivisorClass dc;
    i64 assumed_d3 = 0;  // D^3 computed pretending E^3 = (E^+)^3
    i64 table_d3 = 0;
    bool mismatch = false;
};

/// Compare the table value of D^3 with the value forced by E^3 = (E^+)^3;
/// a mismatch on every row witnesses the flopping curves.
DefectResult defect_check(const Scenario& s, const TableRow& row);

// ---------------------------------------------------------------------------
// Non-Fano blowup search
// ---------------------------------------------------------------------------

/// One arithmetic-feasible candidate of the non-Fano search together with
/// its resolution. gamma and v are meaningful for E1 only.
struct SurvivorRecord {
    RayType type = RayType::E1;
    i64 g = 0, d = 0, h = 0;
    i64 alpha = 0, beta = 0;
    i64 gamma = 0, v = 0;
    bool excluded = false;
    RuleId rule = RuleId::R1;
    std::string citation;
};

struct Verdict {
    std::vector<SurvivorRecord> e1;      // (g,d,h,beta,gamma,v) system
    std::vector<SurvivorRecord> type_c;
    std::vector<SurvivorRecord> type_e;  // E2-E5 signatures
    std::vector<SurvivorRecord> type_d;

    bool all_excluded() const;
    std::vector<const SurvivorRecord*> unresolved() const;
};

/// Run the four bounded sub-searches for a GeneralCurve scenario and apply
/// the prune rules to every survivor.
Verdict nonfano_search(const Scenario& s, int bound_scale = 1);

/// Maximum genus with any feasible two-ray-game or divisorial-contraction
/// case for the given scenario kind over [scenario g_min, g_max]; 0 if none.
i64 gbound_scan(i64 g_max, Scenario::Kind kind = Scenario::Kind::ConicBlowup);

/// Enumerators whose derived bounds are re-validated by bound_stability.
enum class StabilityTarget {
    PointTable,
    ConicTable,
    LineTable,
    PointDivCont,
    ConicDivCont,
    LineDivCont,
    NonFano,
};

std::string_view to_string(StabilityTarget t);
std::span<const StabilityTarget> all_stability_targets();

/// Re-run the target enumeration with every derived internal bound multiplied
/// by `scale` and report whether the solution set is unchanged. scale is
/// capped at 8 to bound the runtime.
bool bound_stability(StabilityTarget target, int scale);

struct IdentityGrid {
    i64 g_min = 6, g_max = 12;
    i64 d_min = 1, d_max = 19;
    i64 h_min = 0, h_max = 10;
    i64 ab_min = 1, ab_max = 8;
};

/// Verify -D^2.(-K)*alpha + D^3 = d*beta*(beta-alpha)*(alpha+beta)
///        + (2h-2)*beta*(alpha+beta)^2 on the whole grid.
bool identity_sweep(const IdentityGrid& grid = {});

}  // namespace tworay
