#pragma once

#include <Eigen/Core>

#include "taubex/errors.hpp"

namespace taubex {

/// Uniform 1-D grid. node(i) = start + i*step is the canonical (and only)
/// node formula, so nodes are bit-reproducible.
struct Grid {
  double start = 0.0;
  double step = 1.0;
  Eigen::Index count = 2;

  Grid() = default;
  Grid(double start_, double step_, Eigen::Index count_)
      : start(start_), step(step_), count(count_) {
    if (!(step > 0.0)) fail(ErrorCode::InvalidArgument, "grid step must be positive");
    if (count < 2) fail(ErrorCode::InvalidArgument, "grid needs at least 2 nodes");
    if (!std::isfinite(start) || !std::isfinite(step))
      fail(ErrorCode::InvalidArgument, "grid parameters must be finite");
  }

  double node(Eigen::Index i) const { return start + static_cast<double>(i) * step; }
  double back() const { return node(count - 1); }

  /// Trapezoid measure weight of node i (half step at the two ends).
  double trapezoid_weight(Eigen::Index i) const {
    return (i == 0 || i == count - 1) ? 0.5 * step : step;
  }

  Eigen::ArrayXd nodes() const {
    Eigen::ArrayXd out(count);
    for (Eigen::Index i = 0; i < count; ++i) out[i] = node(i);
    return out;
  }

  /// Grid covering [lo, hi] with the given step; hi must be lo + m*step up to
  /// 1e-9 relative slack.
  static Grid from_range(double lo, double hi, double step);
};

}  // namespace taubex
