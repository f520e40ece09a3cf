#pragma once

#include <utility>

#include "tworay/checked.hpp"

namespace tworay {

/// Blowup centre on the Fano threefold X: a point, or a smooth curve of
/// anticanonical degree d and genus h.
struct Center {
    enum class Kind { Point, Curve };

    Kind kind = Kind::Point;
    i64 d = 0;  // -K_X . Gamma  (curve only, >= 1)
    i64 h = 0;  // h^1(Gamma, O) (curve only, >= 0)

    static Center point() { return {}; }
    static Center curve(i64 d, i64 h);

    bool is_point() const { return kind == Kind::Point; }

    friend bool operator==(const Center&, const Center&) = default;
};

/// The four intersection numbers generating all arithmetic on the rank-2
/// Picard lattice of the blowup Y:
///   i3 = (-K_Y)^3,  i2 = (-K_Y)^2.E,  i1 = (-K_Y).E^2,  e3 = E^3.
/// i3 and i1 are always even.
struct YInvariants {
    i64 i3 = 0;
    i64 i2 = 0;
    i64 i1 = 0;
    i64 e3 = 0;

    friend bool operator==(const YInvariants&, const YInvariants&) = default;
};

/// D ~ -alpha K - beta E with alpha, beta >= 1.
struct DivisorClass {
    i64 alpha = 1;
    i64 beta = 1;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// (D^3, D^2.(-K), D.(-K)^2) for a divisor class D.
struct DTriple {
    i64 d3 = 0;
    i64 d2k = 0;
    i64 dk2 = 0;

    friend bool operator==(const DTriple&, const DTriple&) = default;
};

/// Intersection numbers of the blowup of a genus-g Fano threefold along the
/// given centre. Point: (2g-10, 4, -2, 1). Curve of degree d, genus h:
/// (2g-2d+2h-4, d-2h+2, 2h-2, -(d+2h-2)).
YInvariants blowup_invariants(i64 g, const Center& center);

/// Full multilinear expansion of
///   (a1(-K) + b1 E) . (a2(-K) + b2 E) . (a3(-K) + b3 E)
/// over (i3, i2, i1, e3). Symmetric and linear in each argument.
i64 triple_product(const YInvariants& inv, std::pair<i64, i64> p1,
                   std::pair<i64, i64> p2, std::pair<i64, i64> p3);

/// D^3, D^2.(-K), D.(-K)^2 via the closed cubic/quadratic/linear forms;
/// agrees with triple_product on the corresponding arguments.
DTriple d_intersections(const YInvariants& inv, DivisorClass dc);

/// omega_D^2 = (K+D)^2.D.
i64 omega_d_squared(const YInvariants& inv, DivisorClass dc);

/// chi(Y, -K_Y) = (-K_Y)^3 / 2 + 3. Requires even i3.
i64 chi_minus_k(const YInvariants& inv);

/// chi(E, -K_Y|_E) = chi(O_E) + (-K_Y)^2.E - (-K_Y).E^2 / 2 for a centre of
/// genus h (chi(O_E) = 1-h). Equals 6 for a point, 5 for a line, d-4h+4 for
/// a degree-d genus-h curve. Requires even i1.
i64 chi_exceptional(const YInvariants& inv, i64 h);

/// Restricted form of chi_exceptional for a point or smooth rational curve
/// centre (h = 0): 1 + (-K_Y)^2.E - (-K_Y).E^2 / 2.
i64 chi_exceptional_rational(const YInvariants& inv);

inline i64 chi_exceptional(const YInvariants& inv, const Center& c) {
    return chi_exceptional(inv, c.is_point() ? 0 : c.h);
}

/// Lower bound for h^0(Y, -K_Y - E): chi(Y,-K_Y) - chi(E,-K_Y|_E).
/// Point: g-8. Line: g-5. Conic: g-7. General curve: g - 2d + 5h - 3.
i64 section_lower_bound(const YInvariants& inv, const Center& c);

/// h^0(X, -mK_X) = m(m+1)(2m+1)(2g-2)/12 + 2m + 1 on a genus-g Fano
/// threefold of Picard rank one.
i64 rr_h0(i64 g, i64 m);

}  // namespace tworay
