#include "simplex_lattice/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplex_lattice {

std::string describe(const LabelRule& rule) {
  struct Visitor {
    std::string operator()(const IdentityRule&) const { return "identity"; }
    std::string operator()(const PiRule& r) const {
      return (r.reading == Reading::SelectedIndex ? "pi:" : "pi-position:") + r.pi.to_string();
    }
    std::string operator()(const ExternalRule& r) const {
      if (r.origin.empty()) return "external";
      return r.origin.starts_with("external") ? r.origin : "external:" + r.origin;
    }
  };
  return std::visit(Visitor{}, rule);
}

Labeling::Labeling(Params params, std::vector<Color> colors, LabelRule rule)
    : params_(params), colors_(std::move(colors)), rule_(std::move(rule)) {
  if (colors_.size() != lattice_size(params_)) {
    throw DomainError("labeling has " + std::to_string(colors_.size()) + " colors, expected " +
                      std::to_string(lattice_size(params_)));
  }
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i].value < 1 || colors_[i].value > params_.k()) {
      throw DomainError("color " + std::to_string(colors_[i].value) + " at rank " +
                        std::to_string(i) + " outside [1, " + std::to_string(params_.k()) + "]");
    }
  }
}

Color Labeling::at_rank(std::uint64_t rank) const {
  if (rank >= colors_.size()) {
    throw RankOutOfRange("rank " + std::to_string(rank) + " outside labeling");
  }
  return colors_[static_cast<std::size_t>(rank)];
}

Color Labeling::color_of(const LatticePoint& v) const {
  if (v.params() != params_) {
    throw DomainError("vertex " + v.to_string() + " is not in the labeling's lattice");
  }
  return colors_[static_cast<std::size_t>(vertex_rank(v))];
}

int deficiency(const LatticePoint& v) {
  int best = 0;  // t = 0
  for (int t = 1; t <= v.params().k(); ++t) best = std::max(best, t - v.coordinate(t));
  return best;
}

int argmin_index(const LatticePoint& v) {
  const int r = deficiency(v);
  int t = 0;
  while (t - v.coordinate(t) != r) ++t;
  return t;
}

Color label(const LatticePoint& v) {
  const int i = argmin_index(v);
  if (i == v.params().k()) throw LabelUndefined(v);
  return Color{i + 1};
}

int scan_position_pi(const LatticePoint& v, const Permutation& pi) {
  if (pi.size() != v.params().dimension()) {
    throw InvalidPermutation("permutation (" + pi.to_string() + ") is not in S_" +
                             std::to_string(v.params().dimension()));
  }
  const int r = deficiency(v);
  int t = 0;
  while (true) {
    const int index = pi.extended(t);
    if (index - v.coordinate(index) == r) return t;
    ++t;
  }
}

int selected_index_pi(const LatticePoint& v, const Permutation& pi) {
  return pi.extended(scan_position_pi(v, pi));
}

Color label_pi(const LatticePoint& v, const Permutation& pi, Reading reading) {
  const int t = scan_position_pi(v, pi);
  const int index = reading == Reading::SelectedIndex ? pi.extended(t) : t;
  if (index == v.params().k()) throw LabelUndefined(v);
  return Color{index + 1};
}

bool is_admissible(const LatticePoint& v, Color color) {
  if (color.value < 1 || color.value > v.params().k()) return false;
  return v.coordinate(color.value) > v.coordinate(color.value - 1);
}

Labeling label_all(const Params& params, const LabelRule& rule) {
  if (std::holds_alternative<ExternalRule>(rule)) {
    throw std::invalid_argument("label_all needs an identity or permutation rule");
  }
  const auto vertices = enumerate_vertices(params);
  std::vector<Color> colors;
  colors.reserve(vertices.size());
  if (const auto* pi_rule = std::get_if<PiRule>(&rule)) {
    for (const auto& v : vertices) colors.push_back(label_pi(v, pi_rule->pi, pi_rule->reading));
  } else {
    for (const auto& v : vertices) colors.push_back(label(v));
  }
  return Labeling(params, std::move(colors), rule);
}

}  // namespace simplex_lattice
