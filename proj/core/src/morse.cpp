#include "funtopo/morse.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace funtopo {

namespace {

void require_positive(double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

const PersistenceDiagram::PointMap& points_or_empty(const PersistenceDiagram& diagram, int degree) {
  static const PersistenceDiagram::PointMap empty;
  return degree < 0 ? empty : diagram.points(degree);
}

}  // namespace

std::size_t cap_number_at(const PersistenceDiagram& diagram, int degree, double t, double epsilon) {
  require_positive(epsilon);
  const ExtendedReal at(t);
  std::size_t n = 0;
  for (const auto& [pt, m] : points_or_empty(diagram, degree - 1))
    if (pt.death() == at && pt.birth().is_finite() && t - pt.birth().value() > epsilon) n += m;
  for (const auto& [pt, m] : points_or_empty(diagram, degree))
    if (pt.birth() == at && pt.death().is_finite() && pt.death().value() - t > epsilon) n += m;
  return n;
}

std::size_t cap_number(const PersistenceDiagram& diagram, int degree, double epsilon) {
  require_positive(epsilon);
  std::size_t n = 0;
  for (const auto& [pt, m] : points_or_empty(diagram, degree - 1))
    if (!pt.death().is_pos_infinity() && pt.persistence() > epsilon) n += m;
  for (const auto& [pt, m] : points_or_empty(diagram, degree))
    if (!pt.birth().is_neg_infinity() && pt.persistence() > epsilon) n += m;
  return n;
}

std::size_t essential_dimension(const PersistenceDiagram& diagram, int degree) {
  std::size_t n = 0;
  for (const auto& [pt, m] : points_or_empty(diagram, degree))
    if (pt.is_essential()) n += m;
  return n;
}

std::size_t nu(const PersistenceDiagram& diagram, int degree, double epsilon) {
  require_positive(epsilon);
  std::size_t n = 0;
  for (const auto& [pt, m] : points_or_empty(diagram, degree))
    if (pt.is_finite() && pt.persistence() > epsilon) n += m;
  return n;
}

MorsePreconditionError::MorsePreconditionError(int degree, ExtendedReal death)
    : PreconditionError("Morse inequalities need m_d(-inf, q) = 0; found degree " +
                        std::to_string(degree) + ", q = " + to_string(death)),
      degree_(degree),
      death_(death) {}

bool MorseReport::identity_holds() const noexcept {
  return std::all_of(records.begin(), records.end(),
                     [](const MorseRecord& r) { return r.identity_holds; });
}

bool MorseReport::inequalities_hold() const noexcept {
  return std::all_of(partial_sums.begin(), partial_sums.end(), [](long long s) { return s >= 0; });
}

MorseReport morse_check(const PersistenceDiagram& diagram, double epsilon, int max_degree) {
  require_positive(epsilon);
  for (const auto& [degree, pts] : diagram.by_degree())
    for (const auto& [pt, m] : pts)
      if (pt.birth().is_neg_infinity()) throw MorsePreconditionError(degree, pt.death());

  MorseReport report{epsilon, {}, {}};
  std::size_t nu_below = 0;  // nu(-1) = 0
  for (int d = 0; d <= max_degree; ++d) {
    MorseRecord r{d, cap_number(diagram, d, epsilon), essential_dimension(diagram, d),
                  nu(diagram, d, epsilon), false};
    const auto lhs = static_cast<long long>(r.cap_number) - static_cast<long long>(r.essential_dimension);
    r.identity_holds = lhs == static_cast<long long>(nu_below + r.nu);
    nu_below = r.nu;
    report.records.push_back(r);
  }
  // s_n = (m_n - p_n) - s_{n-1}
  long long s = 0;
  for (const auto& r : report.records) {
    s = static_cast<long long>(r.cap_number) - static_cast<long long>(r.essential_dimension) - s;
    report.partial_sums.push_back(s);
  }
  return report;
}

void write_report(std::ostream& out, const MorseReport& report) {
  out << "# epsilon = " << format_double(report.epsilon) << '\n';
  out << std::setw(4) << "d" << std::setw(8) << "m_eps" << std::setw(8) << "p" << std::setw(8)
      << "nu" << '\n';
  for (const auto& r : report.records)
    out << std::setw(4) << r.degree << std::setw(8) << r.cap_number << std::setw(8)
        << r.essential_dimension << std::setw(8) << r.nu << '\n';
  out << '\n' << std::setw(4) << "n" << std::setw(13) << "partial_sum" << '\n';
  for (std::size_t n = 0; n < report.partial_sums.size(); ++n)
    out << std::setw(4) << n << std::setw(13) << report.partial_sums[n] << '\n';
}

QuadrantBound cap_finiteness_bound(const PersistenceDiagram& diagram, int degree, double epsilon,
                                   double t0, double t1) {
  require_positive(epsilon);
  if (t0 > t1) throw std::invalid_argument("cap_finiteness_bound: t0 > t1");
  QuadrantBound bound{0, 0};
  for (const auto& [pt, m] : points_or_empty(diagram, degree)) {
    if (!pt.is_finite()) continue;
    const double p = pt.birth().value();
    const double q = pt.death().value();
    if (t0 <= p && q <= t1 && q - p >= epsilon) bound.lhs += m;
  }
  // A point of T^eps needs some x in the open window (p, q - eps/2), which
  // has length >= eps/2; a grid of step eps/4 always hits it.
  const double step = epsilon / 4.0;
  const auto cells = static_cast<long long>(std::ceil((t1 - t0) / step));
  for (long long i = 0; i <= cells; ++i) {
    const double x = t0 + static_cast<double>(i) * step;
    bound.rhs += quadrant_count(diagram, degree, x, x + epsilon / 2.0);
  }
  return bound;
}

}  // namespace funtopo
