#pragma once

// Exhaustive checks of a labeling against the Sperner condition and against a
// bound on the number of distinct colors per hyperedge.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplex_lattice/labeling.hpp"
#include "simplex_lattice/lattice.hpp"

namespace simplex_lattice {

struct SpernerViolation {
  LatticePoint vertex;
  Color color;
};

struct EdgeViolation {
  LatticePoint base;
  Permutation perm;
  std::vector<Color> colors;  // ascending
};

/// Cells F(v, pi) for pairs inconsistent with pi. These are not hyperedges of
/// H^pi; the summary only records what happens to them.
struct InconsistentCellSummary {
  std::uint64_t examined = 0;
  std::uint64_t outside_lattice = 0;  // walk left V_{k,q}
  std::uint64_t within_lattice = 0;
  std::uint64_t within_threshold = 0;  // of within_lattice
};

struct VerificationReport {
  Params params;
  std::string rule;
  std::optional<Permutation> edge_perm{};  // nullopt: E_{k,q}; otherwise E^pi_{k,q}

  bool sperner_checked = false;
  bool sperner_ok = true;
  std::vector<SpernerViolation> sperner_violations{};  // by vertex rank

  bool colors_checked = false;
  int threshold = 0;
  std::uint64_t edges_checked = 0;
  int max_colors_per_edge = 0;
  std::map<int, std::uint64_t> color_count_histogram{};
  std::vector<EdgeViolation> violating_edges{};  // by base rank

  std::optional<InconsistentCellSummary> inconsistent_cells{};

  /// Every check that ran found nothing.
  bool passed() const {
    return (!sperner_checked || sperner_ok) && (!colors_checked || violating_edges.empty());
  }
};

struct CheckOptions {
  /// Also walk the cells F(v, pi) of inconsistent pairs (informational).
  bool strict = false;
};

/// Distinct colors on the vertices of edge, ascending.
/// Throws DomainError if the edge lives in a different lattice.
std::vector<Color> edge_colors(const Hyperedge& edge, const Labeling& labeling);

/// Sperner fields only.
VerificationReport check_sperner(const Labeling& labeling);

/// Color-count fields only. With pi the edges are E^pi_{k,q}, else E_{k,q}.
VerificationReport check_colors(const Labeling& labeling, const std::optional<Permutation>& pi,
                                int threshold, const CheckOptions& options = {});

/// check_sperner and check_colors merged into one report.
VerificationReport check_labeling(const Labeling& labeling, const std::optional<Permutation>& pi,
                                  int threshold, const CheckOptions& options = {});

/// For every pi in S_{k-1} in lexicographic order: build l^pi, check it
/// against E^pi_{k,q}. Propagates LabelUndefined.
std::vector<VerificationReport> check_all_pi(const Params& params, int threshold,
                                             Reading reading = Reading::SelectedIndex,
                                             const CheckOptions& options = {});

}  // namespace simplex_lattice
