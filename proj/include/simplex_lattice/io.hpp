#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simplex_lattice/labeling.hpp"
#include "simplex_lattice/lattice.hpp"
#include "simplex_lattice/oracle.hpp"
#include "simplex_lattice/verify.hpp"

namespace simplex_lattice {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::size_t kDefaultViolationCap = 100;

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// Format from "json" / "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// JSON: {"k", "q", "rule", "version", "labels": [{"v": [...], "color": c}, ...]}.
/// CSV: a "# k=..; q=..; rule=..; version=.." line, the column header
/// "v1,...,v{k-1},color", then one row per vertex. Rows in rank order.
std::string write_labeling(const Labeling& labeling, Format format);

/// Accepts either format (detected from the first non-blank character).
/// Rows may come in any order; the result has an ExternalRule carrying the
/// file's rule descriptor. Throws ParseError naming the row.
Labeling read_labeling(std::string_view bytes);

/// k = 3 only: the triangle R_{3,q} at planar coordinates (v1, v2), one
/// <polygon> per facet and one <circle> per vertex colored by label.
/// Throws UnsupportedDimension for k != 3.
std::string render_svg(const Labeling& labeling);

/// Violation lists are truncated to `cap` entries; counts stay exact.
Json report_to_json(const VerificationReport& report, std::size_t cap = kDefaultViolationCap);
Json oracle_to_json(const OracleResult& result);
Json facets_to_json(const Params& params, const std::vector<Facet>& facets);

/// Pretty-printed with a trailing newline.
std::string to_text(const Json& json);

}  // namespace simplex_lattice
