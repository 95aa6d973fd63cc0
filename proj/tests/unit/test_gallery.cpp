#include <cmath>
#include <numbers>

#include "doctest.h"
#include "funtopo/diagram.hpp"
#include "funtopo/douglas.hpp"
#include "funtopo/errors.hpp"
#include "funtopo/gallery.hpp"
#include "funtopo/homology.hpp"
#include "funtopo/morse.hpp"
#include "funtopo/persistence.hpp"
#include "support/random_models.hpp"

using namespace funtopo;

namespace {

constexpr double kPi = std::numbers::pi;

DouglasInput ellipse(double a, double b, int n) {
  DouglasInput in;
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * kPi * j / n;
    in.curve.push_back({a * std::cos(t), b * std::sin(t)});
  }
  in.phi = identity_phi(n);
  in.quadrature_n = n;
  return in;
}

}  // namespace

TEST_CASE("hawaiian_complex") {
  const auto k2 = hawaiian_complex({1, 2});
  CHECK_NOTHROW(k2.validate());
  // base + 2 loops of 2 vertices and 3 edges + one triangle
  CHECK(k2.size() == 1 + 2 * 5 + 1);
  for (const auto& s : k2.simplices()) CHECK(s.value == (s.vertices == Vertices{0} ? 0.0 : 1.0));
  CHECK(betti_at(k2, 1.0, 1) == 1);
  CHECK(betti_at(k2, 0.5, 0) == 1);
  CHECK(betti_at(k2, 0.5, 1) == 0);

  CHECK(betti_at(hawaiian_complex({1, 1}), 1.0, 1) == 0);
  CHECK(betti_at(hawaiian_complex({1, 5}), 1.0, 1) == 4);

  const auto sphere3 = hawaiian_complex({2, 3});
  CHECK_NOTHROW(sphere3.validate());
  CHECK(betti_at(sphere3, 1.0, 2) == 2);
  CHECK(betti_at(sphere3, 1.0, 1) == 0);

  CHECK_THROWS_AS(hawaiian_complex({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(hawaiian_complex({1, 0}), std::invalid_argument);
}

TEST_CASE("hawaiian_rank_sweep") {
  CHECK(hawaiian_rank_sweep(1, 4) ==
        std::vector<RankSample>{{1, 0}, {2, 1}, {3, 2}, {4, 3}});
  CHECK(hawaiian_rank_sweep(1, 1) == std::vector<RankSample>{{1, 0}});
  const auto sweep = hawaiian_rank_sweep(1, 20);
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(sweep[i].rank == i);
    if (i >= 2) CHECK(sweep[i].rank > sweep[i - 1].rank);
  }
  const auto sweep2 = hawaiian_rank_sweep(2, 5);
  for (const auto& [k, rank] : sweep2) CHECK(rank == static_cast<std::size_t>(k - 1));
  CHECK_THROWS_AS(hawaiian_rank_sweep(1, 0), std::invalid_argument);
}

TEST_CASE("product_family") {
  Barcode three;
  three.add(0, Interval::closed_open(0.0, 1.0));
  three.add(0, Interval::closed_open(0.0, 0.5));
  three.add(0, Interval::closed_open(0.0, 1.0 / 3));
  CHECK(product_family(3) == three);
  CHECK(product_family(1).size() == 1);
  CHECK_THROWS_AS(product_family(0), std::invalid_argument);

  for (int n = 3; n <= 12; ++n) CHECK(cap_number(diagram_of(product_family(n)), 0, 0.25) == 3);

  for (int n = 1; n <= 8; ++n) {
    const auto d = diagram_of(product_family(n));
    CHECK(d.count(0) == static_cast<std::size_t>(n));
    CHECK(d.degrees() == std::vector<int>{0});
    Barcode open;
    for (int i = 1; i <= n; ++i) open.add(0, Interval::open(0.0, 1.0 / i));
    CHECK(radical(product_family(n)) == open);
  }
}

TEST_CASE("douglas_eval closed forms") {
  DouglasInput flat;
  flat.curve.assign(64, {0.0, 0.0});
  flat.phi = identity_phi(64);
  flat.quadrature_n = 64;
  CHECK(douglas_eval(flat) == 0.0);

  const double circle = douglas_eval(ellipse(1.0, 1.0, 512));
  CHECK(std::abs(circle - kPi * kPi) <= 1e-3 * kPi * kPi);

  // Integrand 4 (a^2 sin^2 + b^2 cos^2) of (a+b)/2 averages to 2 (a^2 + b^2).
  const double e = douglas_eval(ellipse(2.0, 1.0, 512));
  CHECK(std::abs(e - 2.5 * kPi * kPi) <= 1e-3 * 2.5 * kPi * kPi);

  // Rotating the parametrization leaves the circle's value unchanged.
  auto shifted = ellipse(1.0, 1.0, 256);
  for (auto& x : shifted.phi) x += 0.3;
  CHECK(std::abs(douglas_eval(shifted) - kPi * kPi) <= 1e-3 * kPi * kPi);
}

TEST_CASE("douglas_eval converges with order at least one") {
  double prev_error = 0.0;
  for (const int n : {16, 32, 64, 128, 256, 512}) {
    const double error = std::abs(douglas_eval(ellipse(1.0, 1.0, n)) - kPi * kPi);
    if (prev_error > 0.0) {
      CHECK(error < prev_error);
      CHECK(std::log2(prev_error / error) >= 1.0);
    }
    prev_error = error;
  }
}

TEST_CASE("douglas_eval is nonnegative") {
  testing::Rng rng(71);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> step(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = std::uniform_int_distribution<int>(8, 64)(rng);
    DouglasInput in;
    for (int j = 0; j < m; ++j) in.curve.push_back({u(rng), u(rng), u(rng)});
    // Random monotone degree-one map: cumulative positive steps scaled to 2pi.
    std::vector<double> w(m);
    double total = 0.0;
    for (auto& x : w) total += (x = step(rng) + 1e-3);
    double acc = u(rng);
    for (int j = 0; j < m; ++j) {
      in.phi.push_back(acc);
      acc += 2.0 * kPi * w[j] / total;
    }
    in.quadrature_n = std::uniform_int_distribution<int>(8, 96)(rng);
    REQUIRE(douglas_eval(in) >= 0.0);
  }
}

TEST_CASE("douglas_eval rejects bad input") {
  auto in = ellipse(1.0, 1.0, 32);
  in.phi.pop_back();
  CHECK_THROWS_AS(douglas_eval(in), ValidationError);

  in = ellipse(1.0, 1.0, 32);
  std::swap(in.phi[3], in.phi[4]);
  CHECK_THROWS_AS(douglas_eval(in), ValidationError);

  in = ellipse(1.0, 1.0, 32);
  in.phi[31] = in.phi[0] + 7.0;  // overshoots the next period
  CHECK_THROWS_AS(douglas_eval(in), ValidationError);

  in = ellipse(1.0, 1.0, 32);
  in.curve[5].push_back(1.0);
  CHECK_THROWS_AS(douglas_eval(in), ValidationError);

  in = ellipse(1.0, 1.0, 32);
  in.quadrature_n = 4;
  CHECK_THROWS_AS(douglas_eval(in), std::invalid_argument);
}
