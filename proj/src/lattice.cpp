#include "tworay/lattice.hpp"

#include <stdexcept>

namespace tworay {

Center Center::curve(i64 d, i64 h) {
    if (d < 1) throw std::invalid_argument("curve centre needs degree >= 1");
    if (h < 0) throw std::invalid_argument("curve centre needs genus >= 0");
    Center c;
    c.kind = Kind::Curve;
    c.d = d;
    c.h = h;
    return c;
}

YInvariants blowup_invariants(i64 g, const Center& center) {
    if (g < 2) throw std::invalid_argument("blowup_invariants: g >= 2 required");
    YInvariants inv;
    if (center.is_point()) {
        inv.i3 = checked_sub(checked_mul(2, g), 10);
        inv.i2 = 4;
        inv.i1 = -2;
        inv.e3 = 1;
    } else {
        const i64 d = center.d, h = center.h;
        inv.i3 = checked_sub(checked_add(checked_mul(2, g), checked_mul(2, h)),
                             checked_add(checked_mul(2, d), 4));
        inv.i2 = d - 2 * h + 2;
        inv.i1 = 2 * h - 2;
        inv.e3 = -(d + 2 * h - 2);
    }
    return inv;
}

i64 triple_product(const YInvariants& inv, std::pair<i64, i64> p1,
                   std::pair<i64, i64> p2, std::pair<i64, i64> p3) {
    const auto [a1, b1] = p1;
    const auto [a2, b2] = p2;
    const auto [a3, b3] = p3;
    // Coefficients of the monomials (-K)^3, (-K)^2 E, (-K) E^2, E^3.
    const i64 c3 = checked_mul(checked_mul(a1, a2), a3);
    const i64 c2 = checked_add(checked_add(checked_mul(checked_mul(a1, a2), b3),
                                           checked_mul(checked_mul(a1, b2), a3)),
                               checked_mul(checked_mul(b1, a2), a3));
    const i64 c1 = checked_add(checked_add(checked_mul(checked_mul(a1, b2), b3),
                                           checked_mul(checked_mul(b1, a2), b3)),
                               checked_mul(checked_mul(b1, b2), a3));
    const i64 c0 = checked_mul(checked_mul(b1, b2), b3);
    i64 t = checked_mul(c3, inv.i3);
    t = checked_add(t, checked_mul(c2, inv.i2));
    t = checked_add(t, checked_mul(c1, inv.i1));
    t = checked_add(t, checked_mul(c0, inv.e3));
    return t;
}

DTriple d_intersections(const YInvariants& inv, DivisorClass dc) {
    const i64 a = dc.alpha, b = dc.beta;
    DTriple t;
    t.d3 = checked_sub(
        checked_add(checked_mul(checked_mul(checked_mul(a, a), a), inv.i3),
                    checked_mul(checked_mul(checked_mul(3, a), checked_mul(b, b)), inv.i1)),
        checked_add(checked_mul(checked_mul(checked_mul(3, a), checked_mul(a, b)), inv.i2),
                    checked_mul(checked_mul(checked_mul(b, b), b), inv.e3)));
    t.d2k = checked_add(
        checked_sub(checked_mul(checked_mul(a, a), inv.i3),
                    checked_mul(checked_mul(checked_mul(2, a), b), inv.i2)),
        checked_mul(checked_mul(b, b), inv.i1));
    t.dk2 = checked_sub(checked_mul(a, inv.i3), checked_mul(b, inv.i2));
    return t;
}

i64 omega_d_squared(const YInvariants& inv, DivisorClass dc) {
    const i64 a = dc.alpha, b = dc.beta;
    return triple_product(inv, {a - 1, -b}, {a - 1, -b}, {a, -b});
}

i64 chi_minus_k(const YInvariants& inv) {
    if (inv.i3 % 2 != 0) throw std::logic_error("chi_minus_k: odd (-K)^3");
    return inv.i3 / 2 + 3;
}

i64 chi_exceptional(const YInvariants& inv, i64 h) {
    if (inv.i1 % 2 != 0) throw std::logic_error("chi_exceptional: odd (-K).E^2");
    return (1 - h) + inv.i2 - inv.i1 / 2;
}

i64 chi_exceptional_rational(const YInvariants& inv) {
    return chi_exceptional(inv, i64{0});
}

i64 section_lower_bound(const YInvariants& inv, const Center& c) {
    return chi_minus_k(inv) - chi_exceptional(inv, c);
}

i64 rr_h0(i64 g, i64 m) {
    if (m < 0) throw std::invalid_argument("rr_h0: m >= 0 required");
    const i64 num = checked_mul(checked_mul(checked_mul(m, m + 1), 2 * m + 1),
                                checked_sub(checked_mul(2, g), 2));
    // m(m+1)(2m+1) is always divisible by 6 and 2g-2 is even.
    if (num % 12 != 0) throw std::logic_error("rr_h0: non-integral value");
    return num / 12 + 2 * m + 1;
}

}  // namespace tworay
