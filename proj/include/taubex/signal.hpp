#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "taubex/grid.hpp"
#include "taubex/util.hpp"

namespace taubex {

/// Declared growth bound |f(t)| <= magnitude * e^{rate*|t|}.
struct GrowthEnvelope {
  double magnitude = 1.0;
  double rate = 0.0;

  double bound(double t) const { return magnitude * std::exp(rate * std::abs(t)); }
};

/// Outcome of probing a declared envelope; violations are data, not errors.
struct EnvelopeVerdict {
  bool pass = true;
  double t = 0.0;         // witness location when !pass
  double observed = 0.0;  // |f(t)| at the witness
  double bound = 0.0;     // declared bound at the witness
};

/// A 1-D signal: uniformly sampled values, an atomic measure, or a named
/// closed form, together with a declared exponential growth envelope.
class SignalSource {
 public:
  struct Sampled {
    Grid grid;
    Eigen::VectorXcd values;
  };
  struct Atom {
    double location;
    Complex weight;
  };
  struct Atomic {
    std::vector<Atom> atoms;  // strictly increasing locations
  };
  struct ClosedForm {
    std::string name;
    std::map<std::string, double> params;
    std::function<Complex(double)> evaluator;
  };

  static SignalSource sampled(Grid grid, Eigen::VectorXcd values, GrowthEnvelope envelope);
  static SignalSource atomic(std::vector<Atom> atoms, GrowthEnvelope envelope);
  /// Registry: exp_step (e^{bt}*1_{t>=0}), exp_poly (e^{bt}(1+t)*1_{t>=0}),
  /// gaussian (e^{-pi t^2}), sinusoid (sin(2 pi freq t)), constant.
  /// All take an optional amp factor. The envelope defaults to a per-family
  /// bound scaled by |amp| and may be overridden.
  static SignalSource closed_form(const std::string& name,
                                  const std::map<std::string, double>& params = {},
                                  std::optional<GrowthEnvelope> envelope = {});
  /// "exp_step:beta=0.5,amp=2" or a CSV path (see signal_from_csv).
  static SignalSource from_spec(const std::string& spec);

  const GrowthEnvelope& envelope() const { return envelope_; }
  const EnvelopeVerdict& construction_verdict() const { return verdict_; }
  bool is_atomic() const { return std::holds_alternative<Atomic>(body_); }
  bool is_sampled() const { return std::holds_alternative<Sampled>(body_); }
  bool is_pointwise() const { return !is_atomic(); }
  const Atomic& atoms() const;
  const Sampled& samples() const;
  /// Grid span for sampled variants; empty otherwise.
  std::optional<std::pair<double, double>> span() const;
  const std::string& name() const { return name_; }

  friend Complex evaluate(const SignalSource& source, double t);
  friend EnvelopeVerdict validate_envelope(const SignalSource& source);
  friend SignalSource translated(const SignalSource& source, double shift);
  friend SignalSource scaled(const SignalSource& source, Complex factor);

 private:
  SignalSource() = default;
  std::variant<Sampled, Atomic, ClosedForm> body_;
  GrowthEnvelope envelope_;
  EnvelopeVerdict verdict_;
  std::string name_ = "signal";
};

/// f(t). Sampled variants interpolate linearly inside the grid span and fail
/// with OutOfRange outside it; Atomic variants fail with NotPointwise.
Complex evaluate(const SignalSource& source, double t);

/// Re-checks the declared envelope on all samples/atoms, or on a fixed probe
/// grid for closed forms.
EnvelopeVerdict validate_envelope(const SignalSource& source);

/// f(. - shift), exact for Atomic and Sampled variants.
SignalSource translated(const SignalSource& source, double shift);

/// factor * f, with the envelope magnitude rescaled.
SignalSource scaled(const SignalSource& source, Complex factor);

/// CSV ingestion: header "t,re,im" or "t,value", strictly increasing t with
/// uniform spacing (1e-9 relative tolerance). Default envelope is
/// (max |value|, 0) unless one is supplied.
SignalSource signal_from_csv(const std::filesystem::path& path,
                             std::optional<GrowthEnvelope> envelope = {});

}  // namespace taubex
