#pragma once

// Integer points of the dilated simplex
//   R_{k,q} = conv{(0,...,0), (0,...,0,q), ..., (q,...,q)} in Z^{k-1},
// i.e. weakly increasing sequences 0 <= v_1 <= ... <= v_{k-1} <= q, together
// with the cells of its edgewise subdivision.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simplex_lattice {

inline constexpr int kMaxK = 16;
inline constexpr int kMaxQ = 1'000'000;

/// Ambient parameters (k, q). k is the number of colors, the points live in
/// Z^{k-1}. q = 0 is accepted so that V_{k,q-1} is expressible for q = 1.
class Params {
 public:
  /// Throws InvalidParams unless 3 <= k <= kMaxK and 0 <= q <= kMaxQ.
  Params(int k, int q);

  int k() const noexcept { return k_; }
  int q() const noexcept { return q_; }
  int dimension() const noexcept { return k_ - 1; }

  /// The parameters of the base-point lattice V_{k,q-1}. Requires q >= 1.
  Params base() const;

  bool operator==(const Params&) const = default;

 private:
  int k_;
  int q_;
};

/// A point of V_{k,q}. The stored coordinates are v_1..v_{k-1}; the extended
/// accessor coordinate(t) also answers v_0 = 0 and v_k = q.
class LatticePoint {
 public:
  /// Throws InvalidPoint if coords has the wrong length or is not a weakly
  /// increasing sequence in [0, q].
  LatticePoint(Params params, std::vector<int> coords);

  const Params& params() const noexcept { return params_; }
  std::span<const int> coords() const noexcept { return coords_; }

  /// v_t for t in [0, k], with v_0 = 0 and v_k = q.
  int coordinate(int t) const;

  /// v + e_i for i in [1, k-1], or nullopt if that leaves V_{k,q}.
  std::optional<LatticePoint> try_increment(int i) const;
  /// v + e_i, throwing InvalidPoint if that leaves V_{k,q}.
  LatticePoint incremented(int i) const;

  /// The same coordinates viewed in another lattice (e.g. V_{k,q-1} -> V_{k,q}).
  LatticePoint rebased(const Params& params) const;

  std::string to_string() const;

  bool operator==(const LatticePoint& other) const {
    return params_ == other.params_ && coords_ == other.coords_;
  }
  /// Lexicographic on coordinates; only meaningful within one lattice.
  std::strong_ordering operator<=>(const LatticePoint& other) const {
    return coords_ <=> other.coords_;
  }

 private:
  Params params_;
  std::vector<int> coords_;
};

/// An element of S_{n} in one-line notation (pi(1), ..., pi(n)).
class Permutation {
 public:
  /// Throws InvalidPermutation unless image is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Parses "2,1,3". Throws InvalidPermutation on malformed input.
  static Permutation parse(std::string_view text);
  /// All of S_n in lexicographic image order.
  static std::vector<Permutation> all(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  std::span<const int> image() const noexcept { return image_; }

  /// pi(position) for position in [1, n].
  int operator()(int position) const;
  /// The extension 0 pi (n+1): pi_bar(0) = 0, pi_bar(n+1) = n+1.
  int extended(int t) const;
  /// 1-based position of value in the one-line image.
  int position_of(int value) const;

  bool is_identity() const noexcept;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& other) const {
    return image_ <=> other.image_;
  }

 private:
  std::vector<int> image_;
  std::vector<int> position_;
};

/// The ordered cell F(v, pi) = {v, v + e_{pi(k-1)}, ..., v + e_{pi(k-1)} + ... + e_{pi(1)}}.
struct Hyperedge {
  LatticePoint base;  // in V_{k,q-1}
  Permutation perm;
  std::vector<LatticePoint> vertices;  // k points of V_{k,q}
};

/// A facet of the edgewise subdivision, indexed by a consistent pair.
struct Facet {
  LatticePoint base;
  Permutation perm;
  bool operator==(const Facet&) const = default;
};

/// binomial(n, r); throws Overflow if the result does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// |V_{k,q}| = binomial(q+k-1, k-1).
std::uint64_t lattice_size(const Params& params);

/// V_{k,q} in lexicographic order.
std::vector<LatticePoint> enumerate_vertices(const Params& params);

/// Index of v in enumerate_vertices(v.params()).
std::uint64_t vertex_rank(const LatticePoint& v);
/// Inverse of vertex_rank; throws RankOutOfRange if rank >= lattice_size(params).
LatticePoint vertex_unrank(std::uint64_t rank, const Params& params);

/// True iff i precedes i+1 in pi whenever v_i = v_{i+1}.
/// Throws InvalidPermutation if pi is not in S_{k-1}.
bool is_consistent(const Permutation& pi, const LatticePoint& v);

/// F(v) for v in V_{k,q-1}, vertices in V_{k,q}. base.params() must be params.base().
Hyperedge hyperedge(const LatticePoint& base, const Params& params);
/// F(v, pi). Throws InconsistentFacet if pi is not consistent with v.
Hyperedge pi_hyperedge(const LatticePoint& base, const Permutation& pi, const Params& params);

/// The vertex sequence of the cell F(v, pi) without the consistency check.
/// Returns nullopt when the walk leaves V_{k,q}, which is exactly what
/// happens for inconsistent pairs.
std::optional<std::vector<LatticePoint>> cell_walk(const LatticePoint& base,
                                                   const Permutation& pi,
                                                   const Params& params);

/// E_{k,q}: one hyperedge per v in V_{k,q-1}, lexicographic base order.
std::vector<Hyperedge> enumerate_hyperedges(const Params& params);
/// E^pi_{k,q}: F(v, pi) for every v in V_{k,q-1} consistent with pi.
std::vector<Hyperedge> enumerate_pi_hyperedges(const Params& params, const Permutation& pi);

/// All consistent pairs (v, pi), ordered by base then permutation image.
std::vector<Facet> enumerate_facets(const Params& params);
/// Same count as enumerate_facets(params).size() without materializing.
std::uint64_t count_facets(const Params& params);

}  // namespace simplex_lattice
