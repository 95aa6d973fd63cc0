#include "doctest.h"
#include "funtopo/cover.hpp"
#include "funtopo/errors.hpp"
#include "support/random_models.hpp"

using namespace funtopo;

namespace {

Cover cover_of(std::vector<CoverSet> sets) { return Cover(std::move(sets)); }

using Ranks = std::vector<std::size_t>;

SimplicialComplex complex_of(std::vector<Vertices> simplices) { return SimplicialComplex(simplices); }

bool face_closed(const SimplicialComplex& k) {
  for (const auto& s : k.simplices())
    for (const auto& f : facets(s))
      if (!k.contains(f)) return false;
  return true;
}

}  // namespace

TEST_CASE("nerve") {
  const Cover chain = cover_of({{1, {1, 2}}, {2, {2, 3}}});
  CHECK(nerve(chain) == complex_of({{1, 2}}));
  const Cover apart = cover_of({{1, {1}}, {2, {2}}});
  CHECK(nerve(apart) == complex_of({{1}, {2}}));
  const Cover single = cover_of({{1, {1, 2, 3}}});
  CHECK(nerve(single) == complex_of({{1}}));
  const Cover triple = cover_of({{0, {5}}, {1, {5, 6}}, {2, {5, 7}}});
  CHECK(nerve(triple) == complex_of({{0, 1, 2}}));
}

TEST_CASE("vietoris") {
  const Cover chain = cover_of({{1, {1, 2}}, {2, {2, 3}}});
  const auto v = vietoris(chain);
  CHECK(v == complex_of({{1, 2}, {2, 3}}));
  CHECK_FALSE(v.contains({1, 3}));
  const Cover single = cover_of({{1, {1, 2, 3}}});
  CHECK(vietoris(single) == complex_of({{1, 2, 3}}));
  CHECK(vietoris(single).size() == 7);
  CHECK(vietoris(Cover{}).size() == 0);
}

TEST_CASE("homology_ranks") {
  CHECK(homology_ranks(complex_of({{0, 1}, {1, 2}, {0, 2}})) == Ranks{1, 1});
  CHECK(homology_ranks(complex_of({{0, 1, 2}})) == Ranks{1, 0, 0});
  CHECK(homology_ranks(complex_of({{0}, {1}})) == Ranks{2});
  CHECK(homology_ranks(SimplicialComplex{}) == Ranks{0});
}

TEST_CASE("dowker_check examples") {
  const auto chain = dowker_check(Cover({{1, {1, 2}}, {2, {2, 3}}}));
  CHECK(chain.agrees);
  CHECK(chain.nerve_ranks == Ranks{1, 0});
  CHECK(chain.vietoris_ranks == Ranks{1, 0});

  const Cover square = cover_of({{0, {1, 2}}, {1, {2, 3}}, {2, {3, 4}}, {3, {4, 1}}});
  const auto cycle = dowker_check(square, PrimeField(3));
  CHECK(cycle.agrees);
  CHECK(cycle.nerve_ranks == Ranks{1, 1});
  CHECK(cycle.vietoris_ranks == Ranks{1, 1});

  const auto empty = dowker_check(Cover{});
  CHECK(empty.agrees);
  CHECK(empty.nerve_ranks == Ranks{0});
}

TEST_CASE("Dowker agreement on random covers") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cover = testing::random_cover(rng);
    for (const std::int64_t p : {2, 3}) {
      const auto r = dowker_check(cover, PrimeField(p));
      REQUIRE(r.agrees);
    }
    REQUIRE(face_closed(nerve(cover)));
    REQUIRE(face_closed(vietoris(cover)));
  }
}

TEST_CASE("balls_cover") {
  const std::vector<std::vector<double>> pair{{0, 1}, {1, 0}};
  const auto small = balls_cover(pair, 0.5);
  REQUIRE(small.sets().size() == 2);
  CHECK(small.sets()[0].elements == std::vector<int>{0});
  CHECK(small.sets()[1].elements == std::vector<int>{1});
  const auto large = balls_cover(pair, 2.0);
  CHECK(large.sets()[0].elements == std::vector<int>{0, 1});
  CHECK(large.sets()[1].elements == std::vector<int>{0, 1});

  const std::vector<std::vector<double>> line{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  const auto c = balls_cover(line, 1.5);
  CHECK(c.sets()[0].elements == std::vector<int>{0, 1});
  CHECK(c.sets()[1].elements == std::vector<int>{0, 1, 2});
  CHECK(c.sets()[2].elements == std::vector<int>{1, 2});
  // Open balls: distance exactly delta is outside.
  CHECK(balls_cover(line, 1.0).sets()[1].elements == std::vector<int>{1});

  CHECK_THROWS_AS(balls_cover(pair, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(balls_cover({{0, 1}, {2, 0}}, 1.0), ValidationError);
  CHECK_THROWS_AS(balls_cover({{0, -1}, {-1, 0}}, 1.0), ValidationError);
  CHECK_THROWS_AS(balls_cover({{0, 1}}, 1.0), ValidationError);
  CHECK_THROWS_AS(balls_cover({{1, 1}, {1, 0}}, 1.0), ValidationError);
}

TEST_CASE("Vietoris complexes of growing balls are nested") {
  testing::Rng rng(62);
  std::uniform_real_distribution<double> coord(0.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    std::vector<std::vector<double>> dist(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[i][j] = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    double prev = 0.2;
    auto smaller = vietoris(balls_cover(dist, prev));
    for (const double delta : {0.5, 1.0, 1.5, 2.5}) {
      const auto larger = vietoris(balls_cover(dist, delta));
      for (const auto& s : smaller.simplices()) REQUIRE(larger.contains(s));
      smaller = larger;
      prev = delta;
    }
    REQUIRE(dowker_check(balls_cover(dist, prev)).agrees);
  }
}
