#pragma once

// JSON configuration parsing, orchestration of engine and closed forms, and
// report emission for the command-line tool.
//
// Document schema:
//   {"order": n, "invariants": {...}}                        named invariants per order
//   {"order": n, "raw": {"eigenspace_dims": [...],
//                        "subgroups": [{"order": d, "curves": [...], "points": [...]}]}}

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bvhodge/closed_forms.hpp"
#include "bvhodge/fixed_locus.hpp"
#include "bvhodge/orbifold_engine.hpp"

namespace bvhodge {

/// Throws ParseError for malformed documents (bad JSON, unknown or missing fields,
/// wrong types, unsupported order) and ValidationError when named invariants
/// cannot be turned into fixed-locus records.
K3Config parse_config(const nlohmann::json& doc);
K3Config parse_config_text(std::string_view text);

/// Parses text as JSON; ParseError on syntax errors.
nlohmann::json parse_document(std::string_view text);

struct RunOptions {
    bool checks = true;
};

struct SectorSummary {
    int element = 0;
    int subgroup_order = 0;
    HodgeDiamond increment{3};
    friend bool operator==(const SectorSummary&, const SectorSummary&) = default;
};

struct RunReport {
    int order = 0;
    std::string source;  ///< "invariants" or "raw"
    nlohmann::json config;
    std::vector<Violation> violations;

    std::optional<HodgeDiamond> diamond;
    Count h11 = 0;
    Count h21 = 0;
    Count euler = 0;
    std::vector<Count> fixed_euler;
    std::vector<SectorSummary> sectors;

    std::optional<HodgePair> closed_form;
    std::optional<Count> closed_form_euler;
    std::string closed_form_status;

    bool checks_enabled = true;
    std::vector<Check> checks;
    /// Order 6 only: value of the printed corollary expression (informational).
    std::optional<Count> corollary;

    std::string error;
    int exit_code = 0;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Validates and computes. Never throws for invalid or inconsistent input: those
/// are reported through violations, checks and exit_code (2 and 3). ParseError
/// propagates.
RunReport run(const nlohmann::json& doc, const RunOptions& options = {});

enum class Format { text, json };

std::string emit(const RunReport& report, Format format);
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// Diamond pictogram, one row per total degree.
std::string diamond_pictogram(const HodgeDiamond& h);

}  // namespace bvhodge
