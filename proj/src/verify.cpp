#include "simplex_lattice/verify.hpp"

#include <algorithm>

namespace simplex_lattice {

namespace {

std::vector<Color> distinct_colors(const std::vector<LatticePoint>& vertices, const Labeling& labeling) {
  std::vector<Color> colors;
  colors.reserve(vertices.size());
  for (const auto& u : vertices) colors.push_back(labeling.color_of(u));
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

VerificationReport empty_report(const Labeling& labeling) {
  return VerificationReport{.params = labeling.params(), .rule = describe(labeling.rule())};
}

}  // namespace

std::vector<Color> edge_colors(const Hyperedge& edge, const Labeling& labeling) {
  return distinct_colors(edge.vertices, labeling);
}

VerificationReport check_sperner(const Labeling& labeling) {
  VerificationReport report = empty_report(labeling);
  report.sperner_checked = true;
  const auto vertices = enumerate_vertices(labeling.params());
  for (std::size_t rank = 0; rank < vertices.size(); ++rank) {
    const Color c = labeling.at_rank(rank);
    if (!is_admissible(vertices[rank], c)) {
      report.sperner_violations.push_back({vertices[rank], c});
    }
  }
  report.sperner_ok = report.sperner_violations.empty();
  return report;
}

VerificationReport check_colors(const Labeling& labeling, const std::optional<Permutation>& pi,
                                int threshold, const CheckOptions& options) {
  const Params& params = labeling.params();
  VerificationReport report = empty_report(labeling);
  report.edge_perm = pi;
  report.colors_checked = true;
  report.threshold = threshold;

  const auto edges = pi ? enumerate_pi_hyperedges(params, *pi) : enumerate_hyperedges(params);
  for (const auto& edge : edges) {
    auto colors = edge_colors(edge, labeling);
    const int count = static_cast<int>(colors.size());
    ++report.color_count_histogram[count];
    ++report.edges_checked;
    report.max_colors_per_edge = std::max(report.max_colors_per_edge, count);
    if (count > threshold) {
      report.violating_edges.push_back({edge.base, edge.perm, std::move(colors)});
    }
  }

  if (options.strict && pi && params.q() >= 1) {
    InconsistentCellSummary summary;
    for (const auto& v : enumerate_vertices(params.base())) {
      if (is_consistent(*pi, v)) continue;
      ++summary.examined;
      const auto walk = cell_walk(v, *pi, params);
      if (!walk) {
        ++summary.outside_lattice;
        continue;
      }
      ++summary.within_lattice;
      if (static_cast<int>(distinct_colors(*walk, labeling).size()) <= threshold) {
        ++summary.within_threshold;
      }
    }
    report.inconsistent_cells = summary;
  }
  return report;
}

VerificationReport check_labeling(const Labeling& labeling, const std::optional<Permutation>& pi,
                                  int threshold, const CheckOptions& options) {
  VerificationReport report = check_colors(labeling, pi, threshold, options);
  VerificationReport sperner = check_sperner(labeling);
  report.sperner_checked = true;
  report.sperner_ok = sperner.sperner_ok;
  report.sperner_violations = std::move(sperner.sperner_violations);
  return report;
}

std::vector<VerificationReport> check_all_pi(const Params& params, int threshold, Reading reading,
                                             const CheckOptions& options) {
  std::vector<VerificationReport> reports;
  for (const auto& pi : Permutation::all(params.dimension())) {
    const Labeling labeling = label_all(params, PiRule{pi, reading});
    reports.push_back(check_labeling(labeling, pi, threshold, options));
  }
  return reports;
}

}  // namespace simplex_lattice
