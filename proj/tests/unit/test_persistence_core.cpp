#include <random>
#include <vector>

#include "doctest.h"
#include "funtopo/barcode.hpp"
#include "funtopo/diagram.hpp"
#include "funtopo/extended_real.hpp"
#include "funtopo/interval.hpp"
#include "support/random_models.hpp"

using namespace funtopo;

namespace {

const ExtendedReal inf = ExtendedReal::infinity();
const ExtendedReal ninf = ExtendedReal::neg_infinity();

// Rank of the structure map of a barcode module written out as a matrix: the
// basis at s is the bars containing s, the basis at t those containing t, and
// a bar maps to itself when it survives. Dense elimination over doubles.
std::size_t module_rank_oracle(const Barcode& b, int degree, double s, double t) {
  const auto bars = b.in_degree(degree);
  std::vector<std::size_t> at_s;
  std::vector<std::size_t> at_t;
  for (std::size_t i = 0; i < bars.size(); ++i) {
    if (bars[i].contains(s)) at_s.push_back(i);
    if (bars[i].contains(t)) at_t.push_back(i);
  }
  std::vector<std::vector<double>> m(at_t.size(), std::vector<double>(at_s.size(), 0.0));
  for (std::size_t r = 0; r < at_t.size(); ++r)
    for (std::size_t c = 0; c < at_s.size(); ++c)
      if (at_t[r] == at_s[c]) m[r][c] = 1.0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < at_s.size() && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0.0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0.0) continue;
      const double f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < at_s.size(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Barcode random_barcode(testing::Rng& rng, int max_bars = 12) {
  Barcode b;
  const int n = std::uniform_int_distribution<int>(0, max_bars)(rng);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) {
    const int degree = std::uniform_int_distribution<int>(0, 2)(rng);
    const double lo = testing::grid_value(rng, 0.5, 10);
    const int kind = std::uniform_int_distribution<int>(0, 5)(rng);
    if (kind == 0) {
      b.add(degree, Interval::singleton(lo));
    } else if (kind == 1) {
      b.add(degree, Interval(coin(rng) ? ninf : ExtendedReal(lo), inf, false, false));
    } else {
      const double hi = lo + 0.5 * std::uniform_int_distribution<int>(1, 6)(rng);
      b.add(degree, Interval(lo, hi, coin(rng), coin(rng)));
    }
  }
  return b;
}

}  // namespace

TEST_CASE("extended reals are totally ordered with symbolic infinities") {
  CHECK(ninf < ExtendedReal(-1e300));
  CHECK(ExtendedReal(1e300) < inf);
  CHECK(ExtendedReal(0.0) == ExtendedReal(-0.0));
  CHECK(inf == ExtendedReal(std::numeric_limits<double>::infinity()));
  CHECK_THROWS_AS(ExtendedReal(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(inf.value(), std::logic_error);
  CHECK(distance(inf, inf) == 0.0);
  CHECK(std::isinf(distance(inf, 3.0)));
  CHECK(std::isinf(distance(ninf, inf)));
}

TEST_CASE("extended real text is shortest round-trip") {
  CHECK(to_string(inf) == "inf");
  CHECK(to_string(ninf) == "-inf");
  CHECK(to_string(0.1) == "0.1");
  CHECK(parse_extended_real("-inf") == ninf);
  CHECK(parse_extended_real("+inf") == inf);
  testing::Rng rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(parse_extended_real(to_string(x)).value() == x);
  }
  CHECK_THROWS_AS(parse_extended_real("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended_real("nan"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended_real(""), std::invalid_argument);
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(Interval(1.0, 0.0, true, false), std::invalid_argument);
  CHECK_THROWS_AS(Interval(ninf, 1.0, true, false), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, inf, true, true), std::invalid_argument);
  CHECK_THROWS_AS(Interval(1.0, 1.0, true, false), std::invalid_argument);
  CHECK_THROWS_AS(Interval(inf, inf, false, false), std::invalid_argument);
  CHECK(Interval::singleton(3.0).is_singleton());
  CHECK(Interval::open(ninf, inf).contains(-1e308));
  CHECK(Interval::closed_open(0.0, 1.0).to_string() == "[0,1)");
}

TEST_CASE("interval_module_rank") {
  const auto half_open = Interval::closed_open(0.0, 1.0);
  CHECK(interval_module_rank(half_open, 0.0, 0.5) == 1);
  CHECK(interval_module_rank(half_open, 0.5, 1.0) == 0);
  CHECK(interval_module_rank(Interval::open(ninf, inf), -10.0, 10.0) == 1);
  CHECK(interval_module_rank(Interval::open(0.0, 1.0), 0.0, 0.5) == 0);
  CHECK(interval_module_rank(Interval::closed(0.0, 1.0), 0.5, 1.0) == 1);
  CHECK_THROWS_AS(interval_module_rank(half_open, 0.6, 0.5), std::invalid_argument);
}

TEST_CASE("barcode_rank") {
  Barcode b;
  b.add(0, Interval::closed_open(0.0, 2.0));
  b.add(0, Interval::closed_open(1.0, 3.0));
  CHECK(module_rank_oracle(b, 0, 0.5, 1.5) == 1);
  CHECK(barcode_rank(b, 0, 0.5, 1.5) == 1);
  CHECK(barcode_rank(Barcode{}, 3, -1.0, 1.0) == 0);

  Barcode e;
  e.add(1, Interval::closed_open(0.0, inf));
  CHECK(barcode_rank(e, 1, 5.0, 100.0) == 1);
  CHECK(barcode_rank(e, 0, 5.0, 100.0) == 0);
  CHECK_THROWS_AS(barcode_rank(e, 1, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("barcode_rank agrees with the matrix rank of the structure map") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = random_barcode(rng);
    const double s = testing::grid_value(rng, 0.25, 36) - 1.0;
    const double t = s + testing::grid_value(rng, 0.25, 12);
    for (int d = 0; d <= 2; ++d) REQUIRE(barcode_rank(b, d, s, t) == module_rank_oracle(b, d, s, t));
  }
}

TEST_CASE("barcode_rank is monotone") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_barcode(rng);
    const double s = testing::grid_value(rng, 0.25, 30);
    const double t = s + testing::grid_value(rng, 0.25, 8);
    const double later = t + testing::grid_value(rng, 0.25, 8);
    const double earlier = s - testing::grid_value(rng, 0.25, 8);
    CHECK(barcode_rank(b, 0, s, later) <= barcode_rank(b, 0, s, t));
    CHECK(barcode_rank(b, 0, earlier, t) <= barcode_rank(b, 0, s, t));
  }
}

TEST_CASE("radical examples") {
  Barcode product;
  product.add(0, Interval::closed_open(0.0, 1.0));
  product.add(0, Interval::closed_open(0.0, 1.0 / 2));
  product.add(0, Interval::closed_open(0.0, 1.0 / 3));
  Barcode expected;
  expected.add(0, Interval::open(0.0, 1.0));
  expected.add(0, Interval::open(0.0, 1.0 / 2));
  expected.add(0, Interval::open(0.0, 1.0 / 3));
  CHECK(radical(product) == expected);

  Barcode open;
  open.add(0, Interval::open(0.0, 1.0));
  CHECK(radical(open) == open);

  Barcode point;
  point.add(2, Interval::singleton(3.0));
  CHECK(radical(point).empty());

  Barcode closed;
  closed.add(1, Interval::closed(0.0, 2.0));
  Barcode half;
  half.add(1, Interval(0.0, 2.0, false, true));
  CHECK(radical(closed) == half);
}

TEST_CASE("radical properties") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = random_barcode(rng);
    const auto r = radical(b);
    REQUIRE(radical(r) == r);
    REQUIRE(diagram_of(r) == diagram_of(b));
    for (int k = 0; k < 10; ++k) {
      // Ranks agree away from the (half-integer) endpoints and can only
      // drop at an attained left endpoint.
      const double s = testing::grid_value(rng, 0.25, 36) - 1.0;
      const double t = s + 0.25 * std::uniform_int_distribution<int>(1, 12)(rng);
      for (int d = 0; d <= 2; ++d) {
        REQUIRE(barcode_rank(r, d, s, t) <= barcode_rank(b, d, s, t));
        REQUIRE(barcode_rank(r, d, s + 0.125, t) == barcode_rank(b, d, s + 0.125, t));
      }
    }
  }
}

TEST_CASE("diagram_of forgets openness and drops singletons") {
  Barcode b;
  b.add(0, Interval::closed_open(0.0, 1.0));
  b.add(0, Interval::closed(0.0, 1.0));
  b.add(0, Interval::open(0.0, 1.0));
  const auto d = diagram_of(b);
  CHECK(d.multiplicity(0, DiagramPoint(0.0, 1.0)) == 3);
  CHECK(d.count(0) == 3);
  CHECK(d.degrees() == std::vector<int>{0});

  Barcode point;
  point.add(1, Interval::singleton(2.0));
  CHECK(diagram_of(point).empty());
  CHECK(diagram_of(Barcode{}).empty());
}

TEST_CASE("diagram points live strictly above the diagonal") {
  CHECK_THROWS_AS(DiagramPoint(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DiagramPoint(inf, inf), std::invalid_argument);
  CHECK_THROWS_AS(DiagramPoint(2.0, ninf), std::invalid_argument);
  CHECK_NOTHROW(DiagramPoint(ninf, inf));
  PersistenceDiagram d;
  CHECK_THROWS_AS(d.add(0, DiagramPoint(0.0, 1.0), 0), std::invalid_argument);
}

TEST_CASE("quadrant_count") {
  PersistenceDiagram d;
  d.add(0, DiagramPoint(0.0, 1.0));
  d.add(0, DiagramPoint(0.0, 3.0));
  d.add(0, DiagramPoint(2.0, 5.0));
  CHECK(quadrant_count(d, 0, 1.0, 2.0) == 1);

  PersistenceDiagram single;
  single.add(0, DiagramPoint(0.0, 1.0));
  CHECK(quadrant_count(single, 0, 0.0, 0.0) == 0);

  PersistenceDiagram line;
  line.add(0, DiagramPoint(ninf, inf));
  CHECK(quadrant_count(line, 0, 0.0, 0.0) == 1);
}

TEST_CASE("quadrant_count dominates the long points it covers") {
  testing::Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = testing::random_diagram(rng, {50, 0, 0.15, 0.1});
    const double x = testing::grid_value(rng, 0.25, 40);
    const double y = x + testing::grid_value(rng, 0.25, 8);
    std::size_t direct = 0;
    std::size_t long_inside = 0;
    for (const auto& pt : d.expanded(0)) {
      const bool inside = pt.birth() < ExtendedReal(x) && ExtendedReal(y) < pt.death();
      if (inside) ++direct;
      if (inside && pt.persistence() > y - x) ++long_inside;
    }
    REQUIRE(quadrant_count(d, 0, x, y) == direct);
    REQUIRE(quadrant_count(d, 0, x, y) >= long_inside);
  }
}

TEST_CASE("constancy_witness") {
  Barcode b;
  b.add(0, Interval::closed_open(0.0, inf));
  b.add(0, Interval::closed_open(1.0, 2.0));
  CHECK(constancy_witness(b, 0) == ConstancyWitness{-1.0, 3.0});
  CHECK(constancy_witness(Barcode{}, 0) == ConstancyWitness{0.0, 0.0});
  Barcode line;
  line.add(0, Interval::open(ninf, inf));
  CHECK(constancy_witness(line, 0) == ConstancyWitness{0.0, 0.0});
}

TEST_CASE("constancy_witness marks where the module stops changing") {
  testing::Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_barcode(rng);
    for (int d = 0; d <= 2; ++d) {
      const auto w = constancy_witness(b, d);
      REQUIRE(w.t0 <= w.t1);
      const auto dim_t0 = barcode_rank(b, d, w.t0, w.t0);
      const auto dim_t1 = barcode_rank(b, d, w.t1, w.t1);
      for (double gap : {0.0, 0.5, 7.0, 1e6}) {
        // M_{u,t0} and M_{t1,u} are isomorphisms: full rank, equal dimensions.
        REQUIRE(barcode_rank(b, d, w.t0 - gap, w.t0) == dim_t0);
        REQUIRE(barcode_rank(b, d, w.t0 - gap, w.t0 - gap) == dim_t0);
        REQUIRE(barcode_rank(b, d, w.t1, w.t1 + gap) == dim_t1);
        REQUIRE(barcode_rank(b, d, w.t1 + gap, w.t1 + gap) == dim_t1);
      }
    }
  }
}
