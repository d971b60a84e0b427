#pragma once

// Sperner-admissible labelings of V_{k,q}.
//
// The deficiency of v is r(v) = max_{t in [0,k]} (t - v_t). The identity rule
// colors v with 1 + (the smallest t attaining r(v)). The permutation rule
// scans coordinate indices in the order 0, pi(1), ..., pi(k-1), k and colors v
// with 1 + (the first coordinate index attaining r(v)). Whenever t attains the
// deficiency and t < k, v_{t+1} >= v_t + 1, so either rule is admissible as
// long as the selected index is below k, which always holds for q > k.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "simplex_lattice/errors.hpp"
#include "simplex_lattice/lattice.hpp"

namespace simplex_lattice {

/// A color in [k] = {1, ..., k}.
struct Color {
  int value = 1;
  auto operator<=>(const Color&) const = default;
};

/// How the permutation rule turns the first scan hit into a color.
enum class Reading {
  /// color = pi_bar(t*) + 1, the coordinate index that was hit.
  SelectedIndex,
  /// color = t* + 1, the scan position. Kept only for comparison; it is not
  /// admissible in general.
  Position,
};

struct IdentityRule {
  bool operator==(const IdentityRule&) const = default;
};
struct PiRule {
  Permutation pi;
  Reading reading = Reading::SelectedIndex;
  bool operator==(const PiRule&) const = default;
};
struct ExternalRule {
  std::string origin;  // rule descriptor found in the source file, if any
  bool operator==(const ExternalRule&) const = default;
};
using LabelRule = std::variant<IdentityRule, PiRule, ExternalRule>;

/// "identity", "pi:2,1", "pi-position:2,1", or "external[:origin]". An origin
/// that already starts with "external" is kept as is, so re-reading a written
/// external labeling is stable.
std::string describe(const LabelRule& rule);

/// The selected index was k, so index + 1 is not a color. Only possible when q <= k.
class LabelUndefined : public Error {
 public:
  explicit LabelUndefined(const LatticePoint& vertex)
      : Error("label undefined at " + vertex.to_string() + ": deficiency is first attained at t = k"),
        vertex_(vertex) {}

  const LatticePoint& vertex() const noexcept { return vertex_; }

 private:
  LatticePoint vertex_;
};

/// A total map V_{k,q} -> [k], stored densely by vertex_rank.
class Labeling {
 public:
  /// Throws DomainError if colors.size() != |V_{k,q}| or a color is outside [1, k].
  Labeling(Params params, std::vector<Color> colors, LabelRule rule);

  const Params& params() const noexcept { return params_; }
  std::span<const Color> colors() const noexcept { return colors_; }
  const LabelRule& rule() const noexcept { return rule_; }
  std::size_t size() const noexcept { return colors_.size(); }

  Color at_rank(std::uint64_t rank) const;
  /// Throws DomainError if v belongs to a different lattice.
  Color color_of(const LatticePoint& v) const;

  /// Equal as maps; the rule is provenance and does not take part.
  bool operator==(const Labeling& other) const {
    return params_ == other.params_ && colors_ == other.colors_;
  }

 private:
  Params params_;
  std::vector<Color> colors_;
  LabelRule rule_;
};

/// r(v) = max over t in [0,k] of t - v_t. Always >= 0.
int deficiency(const LatticePoint& v);
/// i(v) = smallest t in [0,k] with t - v_t = r(v).
int argmin_index(const LatticePoint& v);
/// l(v) = i(v) + 1. Throws LabelUndefined if i(v) = k.
Color label(const LatticePoint& v);

/// First scan position t* in [0,k] (order pi_bar(0), ..., pi_bar(k)) whose
/// coordinate index attains r(v).
int scan_position_pi(const LatticePoint& v, const Permutation& pi);
/// pi_bar(t*), the coordinate index selected by the scan.
int selected_index_pi(const LatticePoint& v, const Permutation& pi);
/// l^pi(v). Throws LabelUndefined if the resulting color would be k + 1.
Color label_pi(const LatticePoint& v, const Permutation& pi,
               Reading reading = Reading::SelectedIndex);

/// The Sperner condition v_c > v_{c-1} for color c at v.
bool is_admissible(const LatticePoint& v, Color color);

/// Labels every vertex of V_{k,q} under an identity or permutation rule.
/// Propagates LabelUndefined from the first offending vertex in rank order.
/// Throws std::invalid_argument for ExternalRule.
Labeling label_all(const Params& params, const LabelRule& rule);

}  // namespace simplex_lattice
