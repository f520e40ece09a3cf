#pragma once

#include <span>

#include "tworay/engine.hpp"

namespace tworay::golden {

/// Canonical two-ray-game rows for the given scenario kind, in the engine's
/// sort order. Embedded in the binary so verification is hermetic.
std::span<const TableRow> table(Scenario::Kind kind);

/// Published divisorial-contraction solution lists.
std::span<const DivContSolution> divcont(Scenario::Kind kind);

/// Expected non-Fano search outcome: the unique E1-feasible tuple and the
/// type-D raw / curated survivor sets as (g, d, h, alpha, beta).
struct NonFanoExpectation {
    SurvivorRecord e1_unique;
    std::span<const SurvivorRecord> d_raw;
    std::span<const SurvivorRecord> d_curated;
};

NonFanoExpectation nonfano();

}  // namespace tworay::golden
