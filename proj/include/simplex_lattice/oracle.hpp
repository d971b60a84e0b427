#pragma once

// Exact search over all Sperner-admissible labelings of V_{k,q} for the
// smallest achievable maximum number of colors on a hyperedge. Independent of
// the built-in labeling rules; meant for desk-scale instances only
// (|V_{k,q}| up to roughly 25).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "simplex_lattice/errors.hpp"
#include "simplex_lattice/labeling.hpp"
#include "simplex_lattice/lattice.hpp"
#include "simplex_lattice/verify.hpp"

namespace simplex_lattice {

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

struct OracleResult {
  Params params;
  std::optional<Permutation> edge_perm{};  // nullopt: E_{k,q}; otherwise E^pi_{k,q}
  /// Exact if exhausted, otherwise the best bound found so far.
  int min_max_colors = 0;
  std::optional<Labeling> witness{};
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(OracleResult partial)
      : Error("oracle node budget exhausted after " + std::to_string(partial.nodes_explored) +
              " nodes; best known bound " + std::to_string(partial.min_max_colors)),
        partial_(std::move(partial)) {}

  const OracleResult& partial() const noexcept { return partial_; }

 private:
  OracleResult partial_;
};

/// {c in [k] : v_c > v_{c-1}}, ascending. Nonempty whenever q >= 1.
std::vector<Color> admissible_colors(const LatticePoint& v);

/// Tightens the bound from k downward, re-searching until infeasible. Vertices
/// are assigned in rank order, colors ascending. Throws InvalidParams if
/// q < 1 and BudgetExceeded (with the partial result) once more than
/// `budget` nodes have been visited.
OracleResult min_max_colors(const Params& params, const std::optional<Permutation>& edge_perm,
                            std::uint64_t budget = kDefaultOracleBudget);

/// Full verification of l^pi under both readings: {selected-index, position}.
/// Requires q > k.
std::pair<VerificationReport, VerificationReport> compare_pi_readings(const Params& params,
                                                                      const Permutation& pi,
                                                                      int threshold = 2);

}  // namespace simplex_lattice
