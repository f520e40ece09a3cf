#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tworay/lattice.hpp"

namespace tworay {

/// Extremal-ray types. E3 and E4 share one numeric signature (they differ
/// only by smoothness of the contracted quadric) and are merged as E34.
enum class RayType { C, D, E1, E2, E34, E5 };

enum class Subtype { None, C1, C2, D1, D2, D3 };

std::string_view to_string(RayType t);
std::string_view to_string(Subtype s);

/// Canonical type order used for row sorting: E2 < D < C < E1 < E34 < E5.
int type_order(RayType t);

struct IntRange {
    i64 lo = 0;
    i64 hi = 0;
    bool contains(i64 v) const { return lo <= v && v <= hi; }
};

/// Numeric signature of a ray type: expected D^3 and D^2.(-K) (when the type
/// fixes them), the admissible D.(-K)^2 range, the beta domain (empty when
/// only the engine-derived bound applies), the Iitaka dimension kappa(D),
/// and h^0(D) when the type fixes it.
struct ConstraintSignature {
    std::optional<i64> d3;
    std::optional<i64> d2k;
    IntRange dk2;
    std::vector<i64> beta_domain;
    int kappa_d = 0;
    std::optional<i64> h0_d;
};

ConstraintSignature type_signature(RayType t);

/// Admissible values of H_W^3 for a Fano threefold W of index beta = r_W:
/// beta=4 -> {1}; beta=3 -> {2}; beta=2 -> {1..5}; beta=1 -> even values in
/// [2, 2*w_max]. In every case w = beta*H^3/2 is an integer in [1, w_max].
std::vector<i64> allowed_hw3(i64 beta, i64 w_max);

/// Membership test equivalent to allowed_hw3 without materialising the set.
bool hw3_allowed(i64 beta, i64 hw3, i64 w_max);

/// Derived invariants of an E1 contraction tau: Y+ -> W with exceptional
/// divisor D ~ -alpha K - beta E^+ (beta = r_W, alpha+1 = beta*gamma):
///   kw3          = (-K_W)^3
///   kwb          = (-K_W).B          for B = tau(D)
///   two_gb_minus_2 = 2 g(B) - 2
///   d3           = D^3 on Y+         (= kw3 - i3 - 3*kwb)
struct E1Derived {
    i64 kw3 = 0;
    i64 kwb = 0;
    i64 two_gb_minus_2 = 0;
    i64 d3 = 0;

    friend bool operator==(const E1Derived&, const E1Derived&) = default;
};

E1Derived e1_derived(const YInvariants& inv, DivisorClass dc);

/// (-K_W)^3 for an E2 contraction: expansion of ((-K) + 2D)^3 with the E2
/// signature constants, which collapses to (-K)^3 + 8.
i64 e2_target_volume(const YInvariants& inv);

/// Refine C into C1/C2 (deg Delta = 12 - dk2 positive / zero) and D into
/// D1/D2/D3 (dk2 in [1,7] / = 8 / = 9). Throws on out-of-range dk2.
Subtype subclassify(RayType t, i64 dk2);

// ---------------------------------------------------------------------------
// Prune rules: curated, citation-carrying encodings of the geometric
// exclusions applied to arithmetic-feasible candidates. They are data, not
// theorems of this engine, and can be disabled globally.
// ---------------------------------------------------------------------------

enum class RuleId { R1, R2, R3 };

std::string_view to_string(RuleId id);

/// Where a candidate came from; R1 applies only in the two-ray games, R3
/// only in the non-Fano blowup search.
enum class SearchContext { TwoRayGame, NonFanoSearch };

struct PruneRule {
    RuleId id;
    std::string_view citation;
};

/// The rule set in its deterministic application order R1, R2, R3.
std::span<const PruneRule> prune_rules();

struct PruneDecision {
    bool excluded = false;
    RuleId rule = RuleId::R1;
    std::string_view citation;
};

/// Apply the rules in order to a candidate with ray type t, divisor class
/// (alpha, beta) and section lower bound lb = h^0(Y, -K_Y - E) bound for its
/// scenario; the first match wins.
PruneDecision apply_prune_rules(RayType t, DivisorClass dc, i64 lb, SearchContext ctx,
                                std::span<const PruneRule> rules = prune_rules());

}  // namespace tworay
