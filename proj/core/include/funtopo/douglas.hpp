#pragma once

#include <vector>

namespace funtopo {

/// Samples of a closed curve g and a reparametrization phi, both on the
/// uniform grid t_j = 2*pi*j/M of [0, 2*pi).
///
/// g is extended 2*pi-periodically and phi by phi(t + 2*pi) = phi(t) + 2*pi;
/// both are linearly interpolated between samples.
struct DouglasInput {
  std::vector<std::vector<double>> curve;
  std::vector<double> phi;
  int quadrature_n = 64;
};

/// Uniform samples of the identity map.
std::vector<double> identity_phi(int samples);

/// (1/16) * integral over [0,2pi)^2 of sin((a-b)/2)^-2 |g(phi(a)) - g(phi(b))|^2
/// by an n x n product rule: a at cell midpoints, b at cell nodes, so a != b
/// everywhere on the grid.
///
/// Throws ValidationError for mismatched grid sizes, ragged curve
/// coordinates or a decreasing phi; std::invalid_argument for n < 8.
double douglas_eval(const DouglasInput& input);

}  // namespace funtopo
