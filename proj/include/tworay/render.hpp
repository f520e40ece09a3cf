#pragma once

#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <vector>

#include "tworay/engine.hpp"

namespace tworay {

enum class Format { Markdown, Csv, Json };

/// Parse "md" / "csv" / "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Added/missing rows of a computed table against the golden rows restricted
/// to [g_min, g_max].
struct TableDiff {
    std::vector<TableRow> missing;
    std::vector<TableRow> extra;
    bool empty() const { return missing.empty() && extra.empty(); }
};

TableDiff diff_rows(std::span<const TableRow> computed, std::span<const TableRow> golden,
                    i64 g_min, i64 g_max);

nlohmann::json row_to_json(const TableRow& row);
nlohmann::json survivor_to_json(const SurvivorRecord& rec);

/// Documents. Every JSON document has the stable top-level keys
/// {scenario, rows, verdict, diff}; markdown mirrors the published column
/// order; CSV uses a fixed header per scenario kind.
std::string render_table(const Scenario& s, std::span<const TableRow> rows,
                         const TableDiff* diff, Format f);
std::string render_divcont(const Scenario& s, std::span<const DivContSolution> sols,
                           bool matches_golden, Format f);
std::string render_defect(const Scenario& s, std::span<const DefectResult> results, Format f);
std::string render_nonfano(const Scenario& s, const Verdict& v, Format f);
std::string render_gbound(Scenario::Kind kind, i64 g_max_scanned, i64 g_max_feasible, Format f);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::string render_checks(std::span<const CheckResult> checks, Format f);

}  // namespace tworay
