#include "simplex_lattice/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "simplex_lattice/errors.hpp"

namespace simplex_lattice {

// ---------------------------------------------------------------- Params

Params::Params(int k, int q) : k_(k), q_(q) {
  if (k < 3 || k > kMaxK) {
    throw InvalidParams("k must be in [3, " + std::to_string(kMaxK) + "], got " + std::to_string(k));
  }
  if (q < 0 || q > kMaxQ) {
    throw InvalidParams("q must be in [0, " + std::to_string(kMaxQ) + "], got " + std::to_string(q));
  }
}

Params Params::base() const {
  if (q_ < 1) throw InvalidParams("base lattice V_{k,q-1} needs q >= 1");
  return Params(k_, q_ - 1);
}

// ---------------------------------------------------------------- LatticePoint

LatticePoint::LatticePoint(Params params, std::vector<int> coords)
    : params_(params), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != params_.dimension()) {
    throw InvalidPoint("expected " + std::to_string(params_.dimension()) + " coordinates, got " +
                       std::to_string(coords_.size()));
  }
  int prev = 0;
  for (int c : coords_) {
    if (c < prev || c > params_.q()) {
      throw InvalidPoint("point " + to_string() + " is not weakly increasing in [0, " +
                         std::to_string(params_.q()) + "]");
    }
    prev = c;
  }
}

int LatticePoint::coordinate(int t) const {
  if (t == 0) return 0;
  if (t == params_.k()) return params_.q();
  if (t < 0 || t > params_.k()) {
    throw std::out_of_range("coordinate index " + std::to_string(t) + " outside [0, k]");
  }
  return coords_[static_cast<std::size_t>(t - 1)];
}

std::optional<LatticePoint> LatticePoint::try_increment(int i) const {
  if (i < 1 || i >= params_.k()) {
    throw std::out_of_range("unit vector index " + std::to_string(i) + " outside [1, k-1]");
  }
  const int next = coords_[static_cast<std::size_t>(i - 1)] + 1;
  if (next > coordinate(i + 1)) return std::nullopt;
  LatticePoint out = *this;
  out.coords_[static_cast<std::size_t>(i - 1)] = next;
  return out;
}

LatticePoint LatticePoint::incremented(int i) const {
  auto out = try_increment(i);
  if (!out) {
    throw InvalidPoint(to_string() + " + e_" + std::to_string(i) + " leaves the lattice");
  }
  return *std::move(out);
}

LatticePoint LatticePoint::rebased(const Params& params) const {
  return LatticePoint(params, coords_);
}

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw InvalidPermutation("permutation must have at least one entry");
  position_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 1; p <= n; ++p) {
    const int value = image_[static_cast<std::size_t>(p - 1)];
    if (value < 1 || value > n || position_[static_cast<std::size_t>(value)] != 0) {
      throw InvalidPermutation("(" + to_string() + ") is not a permutation of 1.." +
                               std::to_string(n));
    }
    position_[static_cast<std::size_t>(value)] = p;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> image;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InvalidPermutation("cannot parse permutation \"" + std::string(text) + "\"");
    }
    image.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> image = identity(n).image_;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

int Permutation::operator()(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("permutation position " + std::to_string(position) + " outside [1, n]");
  }
  return image_[static_cast<std::size_t>(position - 1)];
}

int Permutation::extended(int t) const {
  if (t == 0 || t == size() + 1) return t;
  return (*this)(t);
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size()) {
    throw std::out_of_range("permutation value " + std::to_string(value) + " outside [1, n]");
  }
  return position_[static_cast<std::size_t>(value)];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- counting

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i stays integral at every step.
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                     ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t lattice_size(const Params& params) {
  return binomial(static_cast<std::uint64_t>(params.q() + params.k() - 1),
                  static_cast<std::uint64_t>(params.k() - 1));
}

namespace {

// Weakly increasing sequences of `length` entries drawn from [low, q].
std::uint64_t tail_count(int length, int low, int q) {
  if (low > q) return length == 0 ? 1 : 0;
  return binomial(static_cast<std::uint64_t>(q - low + length), static_cast<std::uint64_t>(length));
}

}  // namespace

std::vector<LatticePoint> enumerate_vertices(const Params& params) {
  const int n = params.dimension();
  const int q = params.q();
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(lattice_size(params)));
  std::vector<int> coords(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(params, coords);
    int i = n - 1;
    while (i >= 0 && coords[static_cast<std::size_t>(i)] == q) --i;
    if (i < 0) break;
    const int value = coords[static_cast<std::size_t>(i)] + 1;
    std::fill(coords.begin() + i, coords.end(), value);
  }
  return out;
}

std::uint64_t vertex_rank(const LatticePoint& v) {
  const int n = v.params().dimension();
  const int q = v.params().q();
  std::uint64_t rank = 0;
  int low = 0;
  for (int i = 0; i < n; ++i) {
    const int value = v.coords()[static_cast<std::size_t>(i)];
    for (int x = low; x < value; ++x) rank += tail_count(n - 1 - i, x, q);
    low = value;
  }
  return rank;
}

LatticePoint vertex_unrank(std::uint64_t rank, const Params& params) {
  if (rank >= lattice_size(params)) {
    throw RankOutOfRange("rank " + std::to_string(rank) + " outside [0, " +
                         std::to_string(lattice_size(params)) + ")");
  }
  const int n = params.dimension();
  const int q = params.q();
  std::vector<int> coords(static_cast<std::size_t>(n));
  int low = 0;
  for (int i = 0; i < n; ++i) {
    int x = low;
    while (true) {
      const std::uint64_t block = tail_count(n - 1 - i, x, q);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    coords[static_cast<std::size_t>(i)] = x;
    low = x;
  }
  return LatticePoint(params, std::move(coords));
}

// ---------------------------------------------------------------- cells

bool is_consistent(const Permutation& pi, const LatticePoint& v) {
  const int n = v.params().dimension();
  if (pi.size() != n) {
    throw InvalidPermutation("permutation (" + pi.to_string() + ") is not in S_" + std::to_string(n));
  }
  for (int i = 1; i < n; ++i) {
    if (v.coordinate(i) == v.coordinate(i + 1) && pi.position_of(i) > pi.position_of(i + 1)) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<LatticePoint>> cell_walk(const LatticePoint& base, const Permutation& pi,
                                                   const Params& params) {
  if (pi.size() != params.dimension()) {
    throw InvalidPermutation("permutation (" + pi.to_string() + ") is not in S_" +
                             std::to_string(params.dimension()));
  }
  std::vector<LatticePoint> vertices;
  vertices.reserve(static_cast<std::size_t>(params.k()));
  vertices.push_back(base.rebased(params));
  for (int position = pi.size(); position >= 1; --position) {
    auto next = vertices.back().try_increment(pi(position));
    if (!next) return std::nullopt;
    vertices.push_back(*std::move(next));
  }
  return vertices;
}

Hyperedge pi_hyperedge(const LatticePoint& base, const Permutation& pi, const Params& params) {
  const LatticePoint v = base.rebased(params.base());
  if (!is_consistent(pi, v)) {
    throw InconsistentFacet("permutation (" + pi.to_string() + ") is not consistent with " +
                            v.to_string());
  }
  auto vertices = cell_walk(v, pi, params);
  // Consistent pairs never leave the lattice.
  if (!vertices) throw InconsistentFacet("cell of " + v.to_string() + " leaves the lattice");
  return Hyperedge{v, pi, *std::move(vertices)};
}

Hyperedge hyperedge(const LatticePoint& base, const Params& params) {
  return pi_hyperedge(base, Permutation::identity(params.dimension()), params);
}

std::vector<Hyperedge> enumerate_pi_hyperedges(const Params& params, const Permutation& pi) {
  std::vector<Hyperedge> out;
  if (params.q() < 1) return out;
  for (const auto& v : enumerate_vertices(params.base())) {
    if (is_consistent(pi, v)) out.push_back(pi_hyperedge(v, pi, params));
  }
  return out;
}

std::vector<Hyperedge> enumerate_hyperedges(const Params& params) {
  return enumerate_pi_hyperedges(params, Permutation::identity(params.dimension()));
}

std::vector<Facet> enumerate_facets(const Params& params) {
  std::vector<Facet> out;
  if (params.q() < 1) return out;
  const auto perms = Permutation::all(params.dimension());
  for (const auto& v : enumerate_vertices(params.base())) {
    for (const auto& pi : perms) {
      if (is_consistent(pi, v)) out.push_back(Facet{v, pi});
    }
  }
  return out;
}

std::uint64_t count_facets(const Params& params) {
  if (params.q() < 1) return 0;
  const auto perms = Permutation::all(params.dimension());
  std::uint64_t count = 0;
  for (const auto& v : enumerate_vertices(params.base())) {
    for (const auto& pi : perms) count += is_consistent(pi, v) ? 1 : 0;
  }
  return count;
}

}  // namespace simplex_lattice
