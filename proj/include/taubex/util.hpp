#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>

namespace taubex {

using Complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// e^{2*pi*i*cycles}, with the argument reduced mod 1 before the trig calls.
///
/// The floor-reduction makes the phase shift-invariant under exactly
/// representable integer cycle offsets: unit_phase(c + n) is bit-identical to
/// unit_phase(c) whenever c + n is computed exactly, and unit_phase(n) is
/// exactly (1, 0). Several algebraic STFT identities rely on this.
inline Complex unit_phase(double cycles) {
  const double reduced = cycles - std::floor(cycles);
  const double angle = two_pi * reduced;
  return {std::cos(angle), std::sin(angle)};
}

/// Runs body(0..n-1) on a deterministic static partition of worker threads.
/// Results must be written to disjoint slots; iteration order inside a chunk
/// is ascending. TAUBEX_THREADS caps the pool size.
void parallel_for(std::ptrdiff_t n, const std::function<void(std::ptrdiff_t)>& body);

/// Shortest exact decimal form used for all CSV output (%.17g).
std::string format_double(double value);

/// FNV-1a, used for deterministic output file naming.
std::uint64_t fnv1a(const std::string& text);

}  // namespace taubex
