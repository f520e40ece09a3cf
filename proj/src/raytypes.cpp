#include "tworay/raytypes.hpp"

#include <array>
#include <stdexcept>

namespace tworay {

std::string_view to_string(RayType t) {
    switch (t) {
        case RayType::C: return "C";
        case RayType::D: return "D";
        case RayType::E1: return "E1";
        case RayType::E2: return "E2";
        case RayType::E34: return "E3/E4";
        case RayType::E5: return "E5";
    }
    return "?";
}

std::string_view to_string(Subtype s) {
    switch (s) {
        case Subtype::None: return "";
        case Subtype::C1: return "C1";
        case Subtype::C2: return "C2";
        case Subtype::D1: return "D1";
        case Subtype::D2: return "D2";
        case Subtype::D3: return "D3";
    }
    return "?";
}

int type_order(RayType t) {
    switch (t) {
        case RayType::E2: return 0;
        case RayType::D: return 1;
        case RayType::C: return 2;
        case RayType::E1: return 3;
        case RayType::E34: return 4;
        case RayType::E5: return 5;
    }
    return 6;
}

ConstraintSignature type_signature(RayType t) {
    ConstraintSignature s;
    switch (t) {
        case RayType::C:
            s.d3 = 0;
            s.d2k = 2;
            s.dk2 = {0, 12};  // deg Delta = 12 - dk2 >= 0
            s.beta_domain = {1, 2};
            s.kappa_d = 2;
            s.h0_d = 3;
            break;
        case RayType::D:
            s.d3 = 0;
            s.d2k = 0;
            s.dk2 = {1, 9};
            s.beta_domain = {1, 2, 3};
            s.kappa_d = 1;
            s.h0_d = 2;
            break;
        case RayType::E1:
            s.d3 = std::nullopt;  // computed via the flop relation
            s.d2k = std::nullopt; // = 2g(B) - 2
            s.dk2 = {1, INT64_MAX};
            s.beta_domain = {1, 2, 3, 4};  // beta = r_W
            s.kappa_d = 0;
            s.h0_d = 1;
            break;
        case RayType::E2:
            s.d3 = 1;
            s.d2k = -2;
            s.dk2 = {4, 4};
            s.beta_domain = {1, 2, 3, 4};  // beta = r_W, with 2a+1 in beta Z
            s.kappa_d = 0;
            s.h0_d = 1;
            break;
        case RayType::E34:
            s.d3 = 2;
            s.d2k = -2;
            s.dk2 = {2, 2};
            s.kappa_d = 0;
            s.h0_d = 1;
            break;
        case RayType::E5:
            s.d3 = 4;
            s.d2k = -2;
            s.dk2 = {1, 1};
            s.kappa_d = 0;
            s.h0_d = 1;
            break;
    }
    return s;
}

bool hw3_allowed(i64 beta, i64 hw3, i64 w_max) {
    switch (beta) {
        case 4: return hw3 == 1;
        case 3: return hw3 == 2;
        case 2: return 1 <= hw3 && hw3 <= 5;
        case 1: return hw3 % 2 == 0 && 2 <= hw3 && hw3 <= 2 * w_max;
        default: throw std::invalid_argument("allowed_hw3: beta must lie in [1,4]");
    }
}

std::vector<i64> allowed_hw3(i64 beta, i64 w_max) {
    if (beta < 1 || beta > 4) throw std::invalid_argument("allowed_hw3: beta must lie in [1,4]");
    if (w_max < 1) throw std::invalid_argument("allowed_hw3: w_max >= 1 required");
    std::vector<i64> out;
    for (i64 v = 1; v <= 2 * w_max; ++v)
        if (hw3_allowed(beta, v, w_max)) out.push_back(v);
    return out;
}

E1Derived e1_derived(const YInvariants& inv, DivisorClass dc) {
    const i64 a = dc.alpha, b = dc.beta;
    if ((a + 1) % b != 0)
        throw std::invalid_argument("e1_derived: alpha + 1 must be divisible by beta");
    E1Derived r;
    r.kw3 = checked_add(
        checked_sub(checked_mul(checked_mul(a + 1, a + 1), inv.i3),
                    checked_mul(checked_mul(checked_mul(2, a + 1), b), inv.i2)),
        checked_mul(checked_mul(b, b), inv.i1));
    r.kwb = checked_add(
        checked_sub(checked_mul(checked_mul(a, a + 1), inv.i3),
                    checked_mul(checked_mul(2 * a + 1, b), inv.i2)),
        checked_mul(checked_mul(b, b), inv.i1));
    r.two_gb_minus_2 = checked_add(
        checked_sub(checked_mul(checked_mul(a, a), inv.i3),
                    checked_mul(checked_mul(checked_mul(2, a), b), inv.i2)),
        checked_mul(checked_mul(b, b), inv.i1));
    r.d3 = checked_sub(checked_sub(r.kw3, inv.i3), checked_mul(3, r.kwb));
    return r;
}

i64 e2_target_volume(const YInvariants& inv) {
    return checked_add(inv.i3, 8);
}

Subtype subclassify(RayType t, i64 dk2) {
    if (t == RayType::C) {
        if (dk2 < 0 || dk2 > 12) throw std::out_of_range("subclassify: dk2 outside [0,12]");
        return dk2 < 12 ? Subtype::C1 : Subtype::C2;  // deg Delta = 12 - dk2
    }
    if (t == RayType::D) {
        if (dk2 < 1 || dk2 > 9) throw std::out_of_range("subclassify: dk2 outside [1,9]");
        if (dk2 <= 7) return Subtype::D1;
        return dk2 == 8 ? Subtype::D2 : Subtype::D3;
    }
    return Subtype::None;
}

std::string_view to_string(RuleId id) {
    switch (id) {
        case RuleId::R1: return "R1";
        case RuleId::R2: return "R2";
        case RuleId::R3: return "R3";
    }
    return "?";
}

namespace {

constexpr std::array<PruneRule, 3> kRules{{
    {RuleId::R1,
     "section count: h0(D) = 1 for the exceptional divisor of a type-E ray, but alpha >= beta "
     "and h0(-K-E) >= 2 force h0(D) >= h0(beta(-K-E)) >= 2"},
    {RuleId::R2,
     "Iitaka dimension: kappa(D) <= 2, but alpha > beta and h0(-K-E) >= 1 force "
     "kappa(D) >= kappa((alpha-beta)(-K)) = 3"},
    {RuleId::R3,
     "section count: h0(D) = 2 for a del Pezzo fibre class D = -K-E over P^1, but "
     "chi(-K) - chi(E,-K|_E) >= 3 forces h0(-K-E) >= 3"},
}};

}  // namespace

std::span<const PruneRule> prune_rules() { return kRules; }

PruneDecision apply_prune_rules(RayType t, DivisorClass dc, i64 lb, SearchContext ctx,
                                std::span<const PruneRule> rules) {
    const bool type_e = t == RayType::E1 || t == RayType::E2 || t == RayType::E34 || t == RayType::E5;
    for (const PruneRule& rule : rules) {
        switch (rule.id) {
            case RuleId::R1:
                if (ctx == SearchContext::TwoRayGame && type_e && dc.alpha >= dc.beta && lb >= 2)
                    return {true, rule.id, rule.citation};
                break;
            case RuleId::R2:
                if (type_signature(t).kappa_d <= 2 && dc.alpha > dc.beta && lb >= 1)
                    return {true, rule.id, rule.citation};
                break;
            case RuleId::R3:
                if (ctx == SearchContext::NonFanoSearch && t == RayType::D &&
                    dc.alpha == dc.beta && lb >= 3)
                    return {true, rule.id, rule.citation};
                break;
        }
    }
    return {};
}

}  // namespace tworay
