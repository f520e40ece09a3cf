#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tworay/engine.hpp"
#include "tworay/render.hpp"

namespace tworay::cli {

/// Exit codes: 0 pass, 1 verification failure, 2 usage error.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct GlobalOptions {
    Format format = Format::Markdown;
    bool no_geometric = false;
    bool no_curated = false;
    std::optional<i64> g_min;
    std::optional<i64> g_max;
};

/// Parse "point" / "conic" / "line"; throws std::invalid_argument otherwise.
Scenario::Kind parse_kind(std::string_view name);

/// Render the two-ray-game table and diff it against the embedded golden
/// rows; exit 0 iff the diff is empty. --no-geometric reports the raw
/// arithmetic-feasible superset and skips the diff. --emit-golden dumps the
/// embedded golden rows instead of enumerating.
int cmd_tables(Scenario::Kind kind, const GlobalOptions& opts, bool emit_golden,
               std::ostream& out);

int cmd_divcont(Scenario::Kind kind, const GlobalOptions& opts, std::ostream& out);

int cmd_defect(Scenario::Kind kind, const GlobalOptions& opts, std::ostream& out);

int cmd_nonfano(const GlobalOptions& opts, std::ostream& out);

int cmd_gbound(i64 g_max, const GlobalOptions& opts, std::ostream& out);

int cmd_verify(int bounds_scale, const GlobalOptions& opts, std::ostream& out);

}  // namespace tworay::cli
