#pragma once

#include <Eigen/Core>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "taubex/grid.hpp"
#include "taubex/signal.hpp"
#include "taubex/util.hpp"

namespace taubex {

/// Declared decay bound |psi(t)| <= magnitude * e^{-rate*|t|}.
struct DecayEnvelope {
  double magnitude = 1.0;
  double rate = 0.0;
};

struct Interval {
  double lo;
  double hi;
};

/// Analysis/synthesis window. Closed-form windows carry analytic first and
/// second derivatives; sampled windows get central-difference ones (absent
/// when the grid is too short). Sampled and compact windows are zero outside
/// their support and count as infinitely fast decaying in rate guards.
class Window {
 public:
  using Evaluator = std::function<Complex(double)>;

  static Window gaussian_pi(double decay_rate = 6.0);  // e^{-pi t^2}
  static Window gaussian(double decay_rate = 4.0);     // e^{-t^2}
  static Window sech();                                // 1/cosh t, rate 1
  static Window compact_bump();                        // e^{-1/(1-t^2)} on (-1,1)
  static Window normalized_bump();                     // compact_bump / its integral
  static Window sampled(Grid grid, Eigen::VectorXcd values, DecayEnvelope decay);
  /// "gaussian", "gaussian_pi:k=5", "sech", "compact_bump".
  static Window from_spec(const std::string& spec);

  Complex value(double t) const { return eval_(t); }
  bool has_derivatives() const { return static_cast<bool>(d1_); }
  Complex derivative1(double t) const;
  Complex derivative2(double t) const;

  const DecayEnvelope& decay() const { return decay_; }
  /// Support interval (window-centered coordinates); nullopt = whole line.
  const std::optional<Interval>& support() const { return support_; }
  /// Decay rate used in dominance guards: +inf for compactly supported
  /// (incl. sampled) windows, the declared rate otherwise.
  double effective_decay_rate() const {
    return support_ ? std::numeric_limits<double>::infinity() : decay_.rate;
  }
  /// psi > 0 on the construction probe grid (restricted to the support).
  bool positive() const { return positive_; }
  const std::string& name() const { return name_; }
  const EnvelopeVerdict& construction_verdict() const { return verdict_; }

  friend Window conjugated(const Window& w);

 private:
  Window() = default;
  void finish_construction();

  Evaluator eval_;
  Evaluator d1_;
  Evaluator d2_;
  DecayEnvelope decay_;
  std::optional<Interval> support_;
  bool positive_ = false;
  std::string name_ = "window";
  EnvelopeVerdict verdict_;
};

/// Window with conjugated values (identity for real windows).
Window conjugated(const Window& w);

/// Probes |psi(t)| <= M e^{-k|t|} on the construction grid.
EnvelopeVerdict validate_decay(const Window& w);

}  // namespace taubex
