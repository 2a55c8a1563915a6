#pragma once

#include <functional>
#include <optional>

#include "taubex/signal.hpp"
#include "taubex/window.hpp"

namespace taubex {

/// Composite trapezoid on a uniform grid over an envelope-truncated domain.
struct QuadratureSpec {
  double step = 0.05;
  double truncation_tol = 1e-12;  // tau, relative to the envelope-product peak
  double max_halfwidth = 60.0;

  void validate() const;
};

/// Node layout of one truncated integral: nodes lo + m*h, m = 0..segments.
struct QuadratureNodes {
  double lo = 0.0;
  double h = 0.0;
  Eigen::Index segments = 0;  // node count = segments + 1

  double node(Eigen::Index m) const { return lo + static_cast<double>(m) * h; }
  double weight(Eigen::Index m) const {
    return (m == 0 || m == segments) ? 0.5 * h : h;
  }
};

/// Integration domain for an integrand bounded by
///   M_w e^{-k|t-center|} * M_f e^{sigma|t|}:
/// the set where that product stays >= tau * (its peak), intersected with
/// [center - max_halfwidth, center + max_halfwidth], an optional window
/// support translated to the center, and an optional hard clip (sampled
/// spans). Throws EmptyDomain when fewer than 2 nodes remain.
QuadratureNodes quadrature_nodes(double center, double growth_rate, double decay_rate,
                                 const QuadratureSpec& spec,
                                 std::optional<Interval> support = {},
                                 std::optional<Interval> clip = {});

/// Composite-trapezoid value over the truncated domain; summation runs in
/// fixed left-to-right node order, so results are bit-reproducible.
Complex integrate(const std::function<Complex(double)>& integrand, double center,
                  const GrowthEnvelope& growth, const DecayEnvelope& decay,
                  const QuadratureSpec& spec,
                  std::optional<Interval> support = {},
                  std::optional<Interval> clip = {});

}  // namespace taubex
