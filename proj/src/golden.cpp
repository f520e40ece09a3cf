#include "tworay/golden.hpp"

#include <array>
#include <stdexcept>

namespace tworay::golden {

namespace {

using R = RayType;
using S = Subtype;

constexpr TableRow e1(i64 g, i64 a, i64 b, i64 d3, i64 rw, i64 kw3, i64 kwb, i64 gb) {
    return {g, R::E1, S::None, {a, b}, d3, rw, kw3, kwb, gb, 0, 0};
}
constexpr TableRow e2(i64 g, i64 a, i64 b, i64 kw3) {
    return {g, R::E2, S::None, {a, b}, 1, b, kw3, 0, 0, 0, 0};
}
constexpr TableRow c1(i64 g, i64 a, i64 b, i64 deg_delta) {
    return {g, R::C, S::C1, {a, b}, 0, 0, 0, 0, 0, deg_delta, 12 - deg_delta};
}
constexpr TableRow d1(i64 g, i64 a, i64 b, i64 dk2) {
    return {g, R::D, S::D1, {a, b}, 0, 0, 0, 0, 0, 0, dk2};
}

// Two-ray game for points (15 rows, canonical order).
constexpr std::array<TableRow, 15> kPointTable{{
    e2(6, 4, 1, 10),
    e1(6, 4, 1, 0, 1, 8, 2, 0),
    e1(6, 5, 1, -22, 1, 22, 14, 5),
    e1(6, 9, 2, -30, 2, 32, 20, 6),
    e2(7, 2, 1, 12),
    e1(7, 2, 1, 0, 1, 10, 2, 0),
    e1(7, 5, 2, -36, 2, 40, 24, 7),
    e1(8, 3, 2, -6, 2, 24, 8, 0),
    e1(8, 5, 3, -42, 3, 54, 30, 7),
    e2(9, 1, 1, 16),
    e1(9, 1, 1, 0, 1, 14, 2, 0),
    d1(10, 1, 1, 6),
    c1(11, 1, 1, 4),
    e1(12, 3, 4, -22, 4, 64, 24, 0),
    e1(13, 2, 3, -16, 3, 54, 18, 0),
}};

// Two-ray game for conics (15 rows).
constexpr std::array<TableRow, 15> kConicTable{{
    e2(5, 4, 1, 10),
    e1(5, 4, 1, 0, 1, 8, 2, 0),
    e1(5, 5, 1, -22, 1, 22, 14, 5),
    e1(5, 9, 2, -30, 2, 32, 20, 6),
    e2(6, 2, 1, 12),
    e1(6, 2, 1, 0, 1, 10, 2, 0),
    e1(6, 5, 2, -36, 2, 40, 24, 7),
    e1(7, 3, 2, -6, 2, 24, 8, 0),
    e1(7, 5, 3, -42, 3, 54, 30, 7),
    e2(8, 1, 1, 16),
    e1(8, 1, 1, 0, 1, 14, 2, 0),
    d1(9, 1, 1, 6),
    c1(10, 1, 1, 4),
    e1(11, 3, 4, -22, 4, 64, 24, 0),
    e1(12, 2, 3, -16, 3, 54, 18, 0),
}};

// Two-ray game for lines (12 rows).
constexpr std::array<TableRow, 12> kLineTable{{
    e1(4, 3, 1, 1, 1, 6, 1, 0),
    e1(4, 4, 1, -17, 1, 18, 11, 4),
    e1(4, 7, 2, -20, 2, 24, 14, 4),
    e1(4, 11, 3, -65, 3, 54, 39, 14),
    c1(5, 2, 1, 7),
    e1(5, 2, 1, -9, 1, 16, 7, 2),
    e1(6, 1, 1, 1, 1, 10, 1, 0),
    d1(7, 1, 1, 5),
    c1(8, 1, 1, 5),
    e1(9, 3, 4, -32, 4, 64, 28, 3),
    e1(10, 2, 3, -23, 3, 54, 21, 2),
    e1(12, 1, 2, -8, 2, 40, 10, 0),
}};

constexpr std::array<DivContSolution, 5> kPointDivCont{{
    {6, 2, 1}, {7, 1, 1}, {6, 4, 2}, {7, 2, 2}, {9, 1, 2},
}};
constexpr std::array<DivContSolution, 5> kConicDivCont{{
    {5, 2, 1}, {6, 1, 1}, {5, 4, 2}, {6, 2, 2}, {8, 1, 2},
}};
constexpr std::array<DivContSolution, 2> kLineDivCont{{
    {4, 3, 2}, {6, 1, 2},
}};

SurvivorRecord d_survivor(i64 g, i64 d, i64 h, i64 a, i64 b) {
    SurvivorRecord r;
    r.type = R::D;
    r.g = g;
    r.d = d;
    r.h = h;
    r.alpha = a;
    r.beta = b;
    return r;
}

}  // namespace

std::span<const TableRow> table(Scenario::Kind kind) {
    switch (kind) {
        case Scenario::Kind::PointBlowup: return kPointTable;
        case Scenario::Kind::ConicBlowup: return kConicTable;
        case Scenario::Kind::LineBlowup: return kLineTable;
        case Scenario::Kind::GeneralCurve: break;
    }
    throw std::invalid_argument("no golden table for this scenario kind");
}

std::span<const DivContSolution> divcont(Scenario::Kind kind) {
    switch (kind) {
        case Scenario::Kind::PointBlowup: return kPointDivCont;
        case Scenario::Kind::ConicBlowup: return kConicDivCont;
        case Scenario::Kind::LineBlowup: return kLineDivCont;
        case Scenario::Kind::GeneralCurve: break;
    }
    throw std::invalid_argument("no golden divcont list for this scenario kind");
}

NonFanoExpectation nonfano() {
    static const std::array<SurvivorRecord, 3> raw{{
        d_survivor(7, 3, 1, 1, 1),
        d_survivor(9, 4, 1, 1, 1),
        d_survivor(11, 5, 1, 1, 1),
    }};
    static const std::array<SurvivorRecord, 2> curated{{
        d_survivor(9, 4, 1, 1, 1),
        d_survivor(11, 5, 1, 1, 1),
    }};
    NonFanoExpectation e;
    e.e1_unique.type = R::E1;
    e.e1_unique.g = 8;
    e.e1_unique.d = 4;
    e.e1_unique.h = 1;
    e.e1_unique.beta = 2;
    e.e1_unique.gamma = 2;
    e.e1_unique.v = 4;
    e.e1_unique.alpha = 3;
    e.d_raw = raw;
    e.d_curated = curated;
    return e;
}

}  // namespace tworay::golden
