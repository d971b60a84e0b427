#include "simplex_lattice/oracle.hpp"

#include <stdexcept>

namespace simplex_lattice {

std::vector<Color> admissible_colors(const LatticePoint& v) {
  std::vector<Color> out;
  for (int c = 1; c <= v.params().k(); ++c) {
    if (v.coordinate(c) > v.coordinate(c - 1)) out.push_back(Color{c});
  }
  return out;
}

namespace {

struct BudgetSignal {};

// Depth-first assignment in vertex-rank order with per-edge color tallies.
class ThresholdSearch {
 public:
  ThresholdSearch(const Params& params, const std::vector<Hyperedge>& edges)
      : k_(params.k()), edge_count_(edges.size()) {
    const auto vertices = enumerate_vertices(params);
    admissible_.reserve(vertices.size());
    for (const auto& v : vertices) {
      std::vector<int> colors;
      for (Color c : admissible_colors(v)) colors.push_back(c.value);
      admissible_.push_back(std::move(colors));
    }
    incident_.resize(vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (const auto& u : edges[e].vertices) incident_[vertex_rank(u)].push_back(e);
    }
    assignment_.assign(vertices.size(), 0);
  }

  // True if some admissible labeling keeps every edge at <= threshold colors.
  bool feasible(int threshold, std::uint64_t& nodes, std::uint64_t budget) {
    threshold_ = threshold;
    tally_.assign(edge_count_ * static_cast<std::size_t>(k_ + 1), 0);
    distinct_.assign(edge_count_, 0);
    nodes_ = &nodes;
    budget_ = budget;
    return descend(0);
  }

  const std::vector<int>& assignment() const { return assignment_; }

 private:
  bool place(std::size_t vertex, int color) {
    bool ok = true;
    for (std::size_t e : incident_[vertex]) {
      if (tally_[e * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(color)]++ == 0 &&
          ++distinct_[e] > threshold_) {
        ok = false;
      }
    }
    return ok;
  }

  void unplace(std::size_t vertex, int color) {
    for (std::size_t e : incident_[vertex]) {
      if (--tally_[e * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(color)] == 0) {
        --distinct_[e];
      }
    }
  }

  bool descend(std::size_t vertex) {
    if (++*nodes_ > budget_) throw BudgetSignal{};
    if (vertex == admissible_.size()) return true;
    for (int color : admissible_[vertex]) {
      assignment_[vertex] = color;
      const bool ok = place(vertex, color);
      if (ok && descend(vertex + 1)) return true;
      unplace(vertex, color);
    }
    return false;
  }

  int k_;
  std::size_t edge_count_;
  std::vector<std::vector<int>> admissible_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> tally_;
  std::vector<int> distinct_;
  std::vector<int> assignment_;
  int threshold_ = 0;
  std::uint64_t* nodes_ = nullptr;
  std::uint64_t budget_ = 0;
};

Labeling to_labeling(const Params& params, const std::vector<int>& assignment) {
  std::vector<Color> colors;
  colors.reserve(assignment.size());
  for (int c : assignment) colors.push_back(Color{c});
  return Labeling(params, std::move(colors), ExternalRule{"oracle"});
}

}  // namespace

OracleResult min_max_colors(const Params& params, const std::optional<Permutation>& edge_perm,
                            std::uint64_t budget) {
  if (params.q() < 1) throw InvalidParams("oracle needs q >= 1");
  const auto edges =
      edge_perm ? enumerate_pi_hyperedges(params, *edge_perm) : enumerate_hyperedges(params);

  OracleResult result{.params = params, .edge_perm = edge_perm};
  ThresholdSearch search(params, edges);
  // Every edge has k vertices, so threshold k is always feasible. Threshold 0
  // is feasible only for an empty edge set.
  result.min_max_colors = params.k();
  try {
    for (int threshold = params.k(); threshold >= 0; --threshold) {
      if (!search.feasible(threshold, result.nodes_explored, budget)) break;
      result.min_max_colors = threshold;
      result.witness = to_labeling(params, search.assignment());
    }
  } catch (const BudgetSignal&) {
    result.exhausted = false;
    throw BudgetExceeded(std::move(result));
  }
  result.exhausted = true;
  return result;
}

std::pair<VerificationReport, VerificationReport> compare_pi_readings(const Params& params,
                                                                      const Permutation& pi,
                                                                      int threshold) {
  if (params.q() <= params.k()) {
    throw std::invalid_argument("compare_pi_readings needs q > k");
  }
  auto run = [&](Reading reading) {
    return check_labeling(label_all(params, PiRule{pi, reading}), pi, threshold);
  };
  return {run(Reading::SelectedIndex), run(Reading::Position)};
}

}  // namespace simplex_lattice
