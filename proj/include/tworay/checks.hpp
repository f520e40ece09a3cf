#pragma once

#include <vector>

#include "tworay/render.hpp"

namespace tworay {

/// The full verification battery behind `verify`: table diffs, divisorial
/// contraction lists, parity witnesses, defect checks, the identity sweep,
/// the non-Fano verdict, genus-bound scans, Riemann-Roch instances, bound
/// stability at the given scale, and determinism. One CheckResult each.
std::vector<CheckResult> run_verify_checks(int bounds_scale = 1);

}  // namespace tworay
