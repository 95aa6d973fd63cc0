#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "funtopo/diagram.hpp"
#include "funtopo/errors.hpp"

namespace funtopo {

// Cap numbers, essential dimensions and the Morse-inequality check, all read
// off a persistence diagram. Degrees below zero count as empty.
// Every epsilon must be positive (std::invalid_argument otherwise).

/// m_d^eps(t): finite-birth deaths at t in degree d-1 with t - p > eps, plus
/// finite-death births at t in degree d with q - t > eps.
std::size_t cap_number_at(const PersistenceDiagram& diagram, int degree, double t, double epsilon);

/// m_d^eps: degree d-1 points with q finite, plus degree d points with p
/// finite, each with q - p > eps.
///
/// This is not the sum over t of cap_number_at: the aggregate also counts
/// essential births in degree d and (-inf, q) deaths in degree d-1, which the
/// per-value count cannot see.
std::size_t cap_number(const PersistenceDiagram& diagram, int degree, double epsilon);

/// p_d: number of degree-d points (p, inf), including p = -inf.
std::size_t essential_dimension(const PersistenceDiagram& diagram, int degree);

/// nu_d: degree-d points with both ends finite and q - p > eps.
std::size_t nu(const PersistenceDiagram& diagram, int degree, double epsilon);

/// The diagram has a point (-inf, q), so the Morse-inequality hypothesis fails.
class MorsePreconditionError : public PreconditionError {
 public:
  MorsePreconditionError(int degree, ExtendedReal death);
  int degree() const noexcept { return degree_; }
  const ExtendedReal& death() const noexcept { return death_; }

 private:
  int degree_;
  ExtendedReal death_;
};

struct MorseRecord {
  int degree;
  std::size_t cap_number;
  std::size_t essential_dimension;
  std::size_t nu;
  /// m_eps(d) - p(d) == nu(d-1) + nu(d).
  bool identity_holds;
};

struct MorseReport {
  double epsilon;
  std::vector<MorseRecord> records;          ///< d = 0..n_max
  std::vector<long long> partial_sums;       ///< sum_{d<=n} (-1)^{n-d} (m_d - p_d)

  bool identity_holds() const noexcept;
  bool inequalities_hold() const noexcept;
};

/// Evaluates the Morse inequalities up to degree n_max. Throws
/// MorsePreconditionError for the lowest-degree (-inf, q) point present in
/// any degree.
MorseReport morse_check(const PersistenceDiagram& diagram, double epsilon, int max_degree);

/// Two aligned tables: `d m_eps p nu` and `n partial_sum`.
void write_report(std::ostream& out, const MorseReport& report);

struct QuadrantBound {
  std::size_t lhs;  ///< points in T^eps = {t0 <= p < q <= t1, q - p >= eps}
  std::size_t rhs;  ///< sum of quadrant counts over the finite cover
};

/// The finite quadrant cover that bounds the points of T^eps: quadrants
/// Q(x, x + eps/2) at x_i = t0 + i*eps/4 for i = 0..ceil(4(t1-t0)/eps).
/// lhs <= rhs always. Throws std::invalid_argument on eps <= 0 or t0 > t1.
QuadrantBound cap_finiteness_bound(const PersistenceDiagram& diagram, int degree, double epsilon,
                                   double t0, double t1);

}  // namespace funtopo
