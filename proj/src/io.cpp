#include "simplex_lattice/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace simplex_lattice {

namespace {

Json point_json(const LatticePoint& v) {
  Json out = Json::array();
  for (int c : v.coords()) out.push_back(c);
  return out;
}

Json perm_json(const Permutation& pi) {
  Json out = Json::array();
  for (int x : pi.image()) out.push_back(x);
  return out;
}

Json colors_json(const std::vector<Color>& colors) {
  Json out = Json::array();
  for (Color c : colors) out.push_back(c.value);
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == text.npos ? text.npos : at - start));
    if (at == text.npos) return out;
    start = at + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Params checked_params(long long k, long long q) {
  try {
    return Params(static_cast<int>(k), static_cast<int>(q));
  } catch (const InvalidParams& e) {
    throw ParseError(0, std::string("bad header: ") + e.what());
  }
}

// Places parsed rows into a dense color table, enforcing the row contract.
class RowCollector {
 public:
  explicit RowCollector(const Params& params)
      : params_(params), colors_(static_cast<std::size_t>(lattice_size(params))) {}

  void add(std::size_t row, std::vector<int> coords, int color) {
    std::optional<LatticePoint> v;
    try {
      v.emplace(params_, std::move(coords));
    } catch (const InvalidPoint& e) {
      throw ParseError(row, std::string("malformed row: ") + e.what());
    }
    if (color < 1 || color > params_.k()) {
      throw ParseError(row, "color out of range: " + std::to_string(color) + " not in [1, " +
                                std::to_string(params_.k()) + "]");
    }
    auto& slot = colors_[static_cast<std::size_t>(vertex_rank(*v))];
    if (slot) throw ParseError(row, "duplicate vertex " + v->to_string());
    slot = Color{color};
    ++rows_;
  }

  Labeling finish(std::string origin) && {
    if (rows_ != colors_.size()) {
      throw ParseError(0, "wrong row count: got " + std::to_string(rows_) + ", expected " +
                              std::to_string(colors_.size()));
    }
    std::vector<Color> dense;
    dense.reserve(colors_.size());
    for (const auto& c : colors_) dense.push_back(*c);
    return Labeling(params_, std::move(dense), ExternalRule{std::move(origin)});
  }

 private:
  Params params_;
  std::vector<std::optional<Color>> colors_;
  std::size_t rows_ = 0;
};

Labeling read_json_labeling(std::string_view bytes) {
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("q") || !doc.contains("labels") ||
      !doc["k"].is_number_integer() || !doc["q"].is_number_integer() || !doc["labels"].is_array()) {
    throw ParseError(0, "bad header: expected integer \"k\", \"q\" and a \"labels\" array");
  }
  const Params params = checked_params(doc["k"].get<long long>(), doc["q"].get<long long>());
  std::string origin;
  if (doc.contains("rule") && doc["rule"].is_string()) origin = doc["rule"].get<std::string>();

  RowCollector rows(params);
  std::size_t row = 0;
  for (const auto& entry : doc["labels"]) {
    ++row;
    if (!entry.is_object() || !entry.contains("v") || !entry.contains("color") ||
        !entry["v"].is_array() || !entry["color"].is_number_integer()) {
      throw ParseError(row, "malformed row: expected {\"v\": [...], \"color\": c}");
    }
    std::vector<int> coords;
    for (const auto& c : entry["v"]) {
      if (!c.is_number_integer()) throw ParseError(row, "malformed row: non-integer coordinate");
      coords.push_back(c.get<int>());
    }
    rows.add(row, std::move(coords), entry["color"].get<int>());
  }
  return std::move(rows).finish(std::move(origin));
}

std::string csv_header(int k) {
  std::string out;
  for (int i = 1; i < k; ++i) out += "v" + std::to_string(i) + ",";
  return out + "color";
}

Labeling read_csv_labeling(std::string_view bytes) {
  auto lines = split(bytes, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.size() < 2 || !trim(lines[0]).starts_with("#")) {
    throw ParseError(0, "bad header: expected a '# k=..; q=..' line and a column header");
  }
  std::optional<int> k;
  std::optional<int> q;
  std::string origin;
  std::string_view meta = trim(lines[0]);
  meta.remove_prefix(1);
  for (auto field : split(meta, ';')) {
    field = trim(field);
    const auto eq = field.find('=');
    if (eq == field.npos) continue;
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "k") k = parse_int(value);
    else if (key == "q") q = parse_int(value);
    else if (key == "rule") origin = std::string(value);
  }
  if (!k || !q) throw ParseError(0, "bad header: missing integer k or q");
  const Params params = checked_params(*k, *q);
  if (trim(lines[1]) != csv_header(params.k())) {
    throw ParseError(0, "bad header: expected column header \"" + csv_header(params.k()) + "\"");
  }

  RowCollector rows(params);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t row = i - 1;
    const auto fields = split(trim(lines[i]), ',');
    if (static_cast<int>(fields.size()) != params.k()) {
      throw ParseError(row, "malformed row: expected " + std::to_string(params.k()) + " fields, got " +
                                std::to_string(fields.size()));
    }
    std::vector<int> values;
    for (auto f : fields) {
      auto value = parse_int(f);
      if (!value) throw ParseError(row, "malformed row: \"" + std::string(f) + "\" is not an integer");
      values.push_back(*value);
    }
    const int color = values.back();
    values.pop_back();
    rows.add(row, std::move(values), color);
  }
  return std::move(rows).finish(std::move(origin));
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\" (expected json or csv)");
}

std::string write_labeling(const Labeling& labeling, Format format) {
  const Params& params = labeling.params();
  const auto vertices = enumerate_vertices(params);
  if (format == Format::Json) {
    Json doc;
    doc["k"] = params.k();
    doc["q"] = params.q();
    doc["rule"] = describe(labeling.rule());
    doc["version"] = kVersion;
    Json labels = Json::array();
    for (std::size_t rank = 0; rank < vertices.size(); ++rank) {
      Json row;
      row["v"] = point_json(vertices[rank]);
      row["color"] = labeling.at_rank(rank).value;
      labels.push_back(std::move(row));
    }
    doc["labels"] = std::move(labels);
    return to_text(doc);
  }
  std::ostringstream out;
  out << "# k=" << params.k() << "; q=" << params.q() << "; rule=" << describe(labeling.rule())
      << "; version=" << kVersion << "\n";
  out << csv_header(params.k()) << "\n";
  for (std::size_t rank = 0; rank < vertices.size(); ++rank) {
    for (int c : vertices[rank].coords()) out << c << ',';
    out << labeling.at_rank(rank).value << "\n";
  }
  return out.str();
}

Labeling read_labeling(std::string_view bytes) {
  const auto first = bytes.find_first_not_of(" \t\r\n");
  if (first == bytes.npos) throw ParseError(0, "empty labeling file");
  return bytes[first] == '{' ? read_json_labeling(bytes) : read_csv_labeling(bytes);
}

std::string render_svg(const Labeling& labeling) {
  const Params& params = labeling.params();
  if (params.k() != 3) {
    throw UnsupportedDimension("SVG rendering supports k = 3 only, got k = " + std::to_string(params.k()));
  }
  constexpr double kCanvas = 480.0;
  constexpr double kMargin = 24.0;
  const int q = params.q();
  const double scale = q > 0 ? (kCanvas - 2 * kMargin) / q : 0.0;
  auto x_of = [&](const LatticePoint& v) { return fixed(kMargin + scale * v.coordinate(1)); };
  auto y_of = [&](const LatticePoint& v) { return fixed(kMargin + scale * (q - v.coordinate(2))); };
  static constexpr const char* kPalette[] = {"", "#d62728", "#2ca02c", "#1f77b4"};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
      << "<title>V_{3," << q << "} labeled by " << describe(labeling.rule()) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
      << "<g id=\"facets\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (const auto& facet : enumerate_facets(params)) {
    const auto edge = pi_hyperedge(facet.base, facet.perm, params);
    // Fully labeled cells are tinted.
    const bool rainbow = edge_colors(edge, labeling).size() == 3;
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < edge.vertices.size(); ++i) {
      if (i) out << ' ';
      out << x_of(edge.vertices[i]) << ',' << y_of(edge.vertices[i]);
    }
    out << "\" fill=\"" << (rainbow ? "#fff3b0" : "none") << "\"/>\n";
  }
  out << "</g>\n<g id=\"vertices\" stroke=\"#000000\" stroke-width=\"0.5\">\n";
  const auto vertices = enumerate_vertices(params);
  for (std::size_t rank = 0; rank < vertices.size(); ++rank) {
    const int color = labeling.at_rank(rank).value;
    out << "<circle cx=\"" << x_of(vertices[rank]) << "\" cy=\"" << y_of(vertices[rank])
        << "\" r=\"6\" fill=\"" << kPalette[color] << "\"><title>" << vertices[rank].to_string()
        << " color " << color << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

Json report_to_json(const VerificationReport& report, std::size_t cap) {
  Json doc;
  doc["k"] = report.params.k();
  doc["q"] = report.params.q();
  doc["rule"] = report.rule;
  doc["edges"] = report.edge_perm ? "pi:" + report.edge_perm->to_string() : std::string("identity");
  doc["passed"] = report.passed();
  if (report.sperner_checked) {
    Json sperner;
    sperner["ok"] = report.sperner_ok;
    sperner["violation_count"] = report.sperner_violations.size();
    Json list = Json::array();
    for (std::size_t i = 0; i < report.sperner_violations.size() && i < cap; ++i) {
      const auto& violation = report.sperner_violations[i];
      list.push_back(Json{{"v", point_json(violation.vertex)}, {"color", violation.color.value}});
    }
    sperner["violations"] = std::move(list);
    doc["sperner"] = std::move(sperner);
  }
  if (report.colors_checked) {
    Json colors;
    colors["threshold"] = report.threshold;
    colors["edges_checked"] = report.edges_checked;
    colors["max_colors_per_edge"] = report.max_colors_per_edge;
    Json histogram = Json::object();
    for (const auto& [count, edges] : report.color_count_histogram) {
      histogram[std::to_string(count)] = edges;
    }
    colors["histogram"] = std::move(histogram);
    colors["violation_count"] = report.violating_edges.size();
    Json list = Json::array();
    for (std::size_t i = 0; i < report.violating_edges.size() && i < cap; ++i) {
      const auto& edge = report.violating_edges[i];
      list.push_back(Json{{"base", point_json(edge.base)},
                          {"pi", perm_json(edge.perm)},
                          {"colors", colors_json(edge.colors)}});
    }
    colors["violations"] = std::move(list);
    doc["colors"] = std::move(colors);
  }
  if (report.inconsistent_cells) {
    const auto& cells = *report.inconsistent_cells;
    doc["inconsistent_cells"] = Json{{"examined", cells.examined},
                                     {"outside_lattice", cells.outside_lattice},
                                     {"within_lattice", cells.within_lattice},
                                     {"within_threshold", cells.within_threshold}};
  }
  return doc;
}

Json oracle_to_json(const OracleResult& result) {
  Json doc;
  doc["k"] = result.params.k();
  doc["q"] = result.params.q();
  doc["edges"] = result.edge_perm ? "pi:" + result.edge_perm->to_string() : std::string("identity");
  doc["exhausted"] = result.exhausted;
  doc["min_max_colors"] = result.min_max_colors;
  doc["nodes_explored"] = result.nodes_explored;
  if (result.witness) {
    Json witness = Json::array();
    for (Color c : result.witness->colors()) witness.push_back(c.value);
    doc["witness"] = std::move(witness);
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

Json facets_to_json(const Params& params, const std::vector<Facet>& facets) {
  Json doc;
  doc["k"] = params.k();
  doc["q"] = params.q();
  doc["count"] = facets.size();
  Json list = Json::array();
  for (const auto& f : facets) list.push_back(Json{{"base", point_json(f.base)}, {"pi", perm_json(f.perm)}});
  doc["facets"] = std::move(list);
  return doc;
}

std::string to_text(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace simplex_lattice
