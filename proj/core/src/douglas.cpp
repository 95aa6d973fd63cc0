#include "funtopo/douglas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "funtopo/errors.hpp"

namespace funtopo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pairwise summation in a fixed tree order.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (auto i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const auto mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

class Reparametrization {
 public:
  explicit Reparametrization(const std::vector<double>& samples) : samples_(samples) {}

  double operator()(double t) const {
    const double turns = std::floor(t / kTwoPi);
    const double u = (t - turns * kTwoPi) * samples_.size() / kTwoPi;
    auto j = static_cast<std::size_t>(u);
    if (j >= samples_.size()) j = samples_.size() - 1;
    const double frac = u - static_cast<double>(j);
    const double left = samples_[j];
    const double right = j + 1 < samples_.size() ? samples_[j + 1] : samples_[0] + kTwoPi;
    return (1.0 - frac) * left + frac * right + turns * kTwoPi;
  }

 private:
  const std::vector<double>& samples_;
};

class PeriodicCurve {
 public:
  explicit PeriodicCurve(const std::vector<std::vector<double>>& samples) : samples_(samples) {}

  std::vector<double> operator()(double x) const {
    double t = std::fmod(x, kTwoPi);
    if (t < 0) t += kTwoPi;
    const double u = t * samples_.size() / kTwoPi;
    auto j = static_cast<std::size_t>(u);
    if (j >= samples_.size()) j = samples_.size() - 1;
    const double frac = u - static_cast<double>(j);
    const auto& left = samples_[j];
    const auto& right = samples_[(j + 1) % samples_.size()];
    std::vector<double> out(left.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (1.0 - frac) * left[k] + frac * right[k];
    return out;
  }

 private:
  const std::vector<std::vector<double>>& samples_;
};

void validate(const DouglasInput& input) {
  if (input.quadrature_n < 8) throw std::invalid_argument("douglas_eval: quadrature n must be >= 8");
  if (input.curve.empty()) throw ValidationError("douglas_eval: no curve samples");
  if (input.curve.size() != input.phi.size())
    throw ValidationError("douglas_eval: curve and phi grids differ in size");
  const auto dim = input.curve.front().size();
  if (dim == 0) throw ValidationError("douglas_eval: curve samples have no coordinates");
  for (const auto& s : input.curve) {
    if (s.size() != dim) throw ValidationError("douglas_eval: ragged curve samples");
    for (double x : s)
      if (!std::isfinite(x)) throw ValidationError("douglas_eval: non-finite curve sample");
  }
  for (std::size_t j = 0; j < input.phi.size(); ++j) {
    const double next = j + 1 < input.phi.size() ? input.phi[j + 1] : input.phi[0] + kTwoPi;
    if (!std::isfinite(input.phi[j]) || next < input.phi[j])
      throw ValidationError("douglas_eval: phi is not monotone");
  }
}

}  // namespace

std::vector<double> identity_phi(int samples) {
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) out[j] = kTwoPi * j / samples;
  return out;
}

double douglas_eval(const DouglasInput& input) {
  validate(input);
  const Reparametrization phi(input.phi);
  const PeriodicCurve g(input.curve);
  const auto n = static_cast<std::size_t>(input.quadrature_n);
  const double h = kTwoPi / static_cast<double>(n);

  // alpha_i = (i + 1/2) h, beta_j = (j + 1) h; alpha - beta is never 0 mod 2pi.
  std::vector<std::vector<double>> at_alpha(n);
  std::vector<std::vector<double>> at_beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    at_alpha[i] = g(phi((static_cast<double>(i) + 0.5) * h));
    at_beta[i] = g(phi((static_cast<double>(i) + 1.0) * h));
  }

  std::vector<double> rows(n);
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < at_alpha[i].size(); ++k) {
        const double diff = at_alpha[i][k] - at_beta[j][k];
        sq += diff * diff;
      }
      const double offset = (static_cast<double>(i) - static_cast<double>(j) - 0.5) * h;
      const double s = std::sin(offset / 2.0);
      terms[j] = sq / (s * s);
    }
    rows[i] = pairwise_sum(terms, 0, n);
  }
  return pairwise_sum(rows, 0, n) * h * h / 16.0;
}

}  // namespace funtopo
