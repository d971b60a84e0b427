#include <doctest.h>

#include <numeric>

#include "reference.hpp"
#include "simplex_lattice/io.hpp"
#include "simplex_lattice/verify.hpp"

using namespace simplex_lattice;

namespace {

LatticePoint pt(int k, int q, std::vector<int> coords) { return LatticePoint(Params(k, q), std::move(coords)); }

Labeling constant(const Params& params, int color) {
  return Labeling(params, std::vector<Color>(lattice_size(params), Color{color}), ExternalRule{"constant"});
}

std::vector<int> values(const std::vector<Color>& colors) {
  std::vector<int> out;
  for (Color c : colors) out.push_back(c.value);
  return out;
}

std::uint64_t histogram_total(const VerificationReport& report) {
  std::uint64_t total = 0;
  for (const auto& [count, edges] : report.color_count_histogram) total += edges;
  return total;
}

}  // namespace

TEST_CASE("edge_colors examples") {
  const Params params(3, 4);
  const auto l = label_all(params, IdentityRule{});
  CHECK(values(edge_colors(hyperedge(pt(3, 3, {0, 0}), params), l)) == std::vector<int>{2, 3});
  CHECK(values(edge_colors(hyperedge(pt(3, 3, {3, 3}), params), l)) == std::vector<int>{1});
  for (const auto& e : enumerate_hyperedges(params)) CHECK(edge_colors(e, constant(params, 2)).size() == 1);
  CHECK_THROWS_AS(edge_colors(hyperedge(pt(3, 4, {0, 0}), Params(3, 5)), l), DomainError);
}

TEST_CASE("check_sperner examples") {
  for (int k = 3; k <= 6; ++k) {
    const auto report = check_sperner(label_all(Params(k, k + 1), IdentityRule{}));
    CHECK(report.sperner_ok);
    CHECK(report.sperner_violations.empty());
  }

  const auto bad = check_sperner(constant(Params(3, 2), 1));
  CHECK_FALSE(bad.sperner_ok);
  REQUIRE_FALSE(bad.sperner_violations.empty());
  CHECK(bad.sperner_violations.front().vertex == pt(3, 2, {0, 0}));
  // Only v_1 > 0 admits color 1: (0,0), (0,1), (0,2) violate, in rank order.
  CHECK(bad.sperner_violations.size() == 3);
  CHECK_FALSE(bad.passed());

  const auto position = check_sperner(label_all(Params(3, 4), PiRule{Permutation::parse("2,1"), Reading::Position}));
  CHECK_FALSE(position.sperner_ok);
  CHECK(position.sperner_violations.size() == 3);
}

TEST_CASE("check_colors examples") {
  const auto ok = check_colors(label_all(Params(4, 5), IdentityRule{}), std::nullopt, 2);
  CHECK(ok.max_colors_per_edge <= 2);
  CHECK(ok.violating_edges.empty());
  CHECK(ok.passed());

  const auto strict = check_colors(label_all(Params(3, 4), IdentityRule{}), std::nullopt, 1);
  REQUIRE_FALSE(strict.violating_edges.empty());
  CHECK(strict.violating_edges.front().base == pt(3, 3, {0, 0}));
  CHECK(values(strict.violating_edges.front().colors) == std::vector<int>{2, 3});
  CHECK_FALSE(strict.passed());

  // V_{3,1} admits exactly one Sperner-admissible labeling.
  const Labeling only(Params(3, 1), {Color{3}, Color{2}, Color{1}}, ExternalRule{});
  CHECK(check_sperner(only).sperner_ok);
  const auto single = check_colors(only, std::nullopt, 2);
  CHECK(single.color_count_histogram.size() == 1);
  CHECK(single.color_count_histogram.at(3) == 1);
}

TEST_CASE("check_all_pi examples") {
  const auto k3 = check_all_pi(Params(3, 4), 2);
  REQUIRE(k3.size() == 2);
  for (const auto& r : k3) CHECK(r.passed());
  CHECK(k3[1].edge_perm == Permutation::parse("2,1"));

  const auto k4 = check_all_pi(Params(4, 5), 2);
  REQUIRE(k4.size() == 6);
  for (const auto& r : k4) CHECK(r.passed());

  // Outside the q > k guarantee; recorded, not part of the guarantee.
  const auto probe = check_all_pi(Params(3, 3), 2);
  CHECK(probe.size() == 2);
  CHECK_THROWS_AS(check_all_pi(Params(3, 2), 2), LabelUndefined);
}

TEST_CASE("report invariants over a sweep") {
  for (int k = 3; k <= 5; ++k) {
    for (int q = k + 1; q <= k + 3; ++q) {
      const Params params(k, q);
      for (const auto& pi : Permutation::all(k - 1)) {
        const auto report = check_labeling(label_all(params, PiRule{pi}), pi, 2);
        std::uint64_t consistent = 0;
        for (const auto& v : enumerate_vertices(params.base())) consistent += is_consistent(pi, v) ? 1 : 0;
        CHECK(histogram_total(report) == consistent);
        CHECK(report.edges_checked == consistent);
        CHECK(report.max_colors_per_edge == report.color_count_histogram.rbegin()->first);
        CHECK(report.sperner_ok == report.sperner_violations.empty());
        CHECK(report.passed());
      }
      const auto plain = check_colors(label_all(params, IdentityRule{}), std::nullopt, 2);
      CHECK(histogram_total(plain) == reference::binomial(q + k - 2, k - 1));
    }
  }
}

TEST_CASE("color counts agree with a reference walk over raw coordinates") {
  for (int k = 3; k <= 5; ++k) {
    const int q = k + 2;
    const Params params(k, q);
    const auto ref_vertices = reference::vertices(k, q);
    for (const auto& pi : Permutation::all(k - 1)) {
      const auto labeling = label_all(params, PiRule{pi});
      const std::vector<int> image(pi.image().begin(), pi.image().end());
      auto color_at = [&](const reference::Coords& c) {
        const auto it = std::find(ref_vertices.begin(), ref_vertices.end(), c);
        return labeling.at_rank(static_cast<std::uint64_t>(it - ref_vertices.begin())).value;
      };
      int worst = 0;
      for (const auto& v : reference::vertices(k, q - 1)) {
        if (!reference::consistent(image, v)) continue;
        std::vector<int> colors;
        for (const auto& u : reference::cell(v, image)) colors.push_back(color_at(u));
        worst = std::max(worst, reference::distinct(colors));
      }
      CHECK(check_colors(labeling, pi, 2).max_colors_per_edge == worst);
    }
  }
}

TEST_CASE("strict mode: inconsistent cells never lie inside the lattice") {
  for (int k = 3; k <= 5; ++k) {
    const Params params(k, k + 2);
    for (const auto& pi : Permutation::all(k - 1)) {
      const auto report = check_colors(label_all(params, PiRule{pi}), pi, 2, {.strict = true});
      REQUIRE(report.inconsistent_cells.has_value());
      const auto& cells = *report.inconsistent_cells;
      CHECK(cells.within_lattice == 0);
      CHECK(cells.outside_lattice == cells.examined);
      CHECK(cells.examined + report.edges_checked == lattice_size(params.base()));
    }
  }
}

TEST_CASE("serialized reports are deterministic") {
  const Params params(4, 6);
  const auto run = [&] {
    std::string out;
    for (const auto& r : check_all_pi(params, 1)) out += to_text(report_to_json(r));
    return out;
  };
  CHECK(run() == run());
}
