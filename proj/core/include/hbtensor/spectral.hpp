#pragma once

#include "hbtensor/tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

namespace hbtensor {

struct SpectralBoundReport {
  Approach approach = Approach::silo;
  unsigned r_h = 0;
  Rational delta;       // max original vertex m-degree
  Rational delta_star;  // max null vertex m-degree, 0 without null vertices
  Rational bound;       // max(delta, delta_star) + r_h
  /// delta_star predicted from the recovered edge distribution; empty when
  /// the distribution is not recoverable (weighted edges).
  std::optional<Rational> delta_star_closed;
  std::optional<double> empirical_lambda;
  bool converged = false;
};

/// Null-vertex maximum degree predicted from the edge distribution alone.
Rational delta_star_closed_form(Approach approach, unsigned r_h,
                                const std::map<unsigned, BigInt>& distribution);

/// Throws Error(TraceMismatch) when the tensor shape disagrees with the trace.
/// |E| is taken as the number of canonical entries.
SpectralBoundReport spectral_bound(const SymTensor& t, const UniformisationTrace& trace);

struct PowerIterationOptions {
  std::size_t max_iterations = 10'000;
  double tolerance = 1e-10;
  std::uint64_t seed = 1;
};

struct PowerIterationResult {
  double lambda = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

/// Shifted higher-order power iteration on the positive orthant. Returns the
/// best Rayleigh quotient seen. Requires order >= 2 and nonnegative entries.
PowerIterationResult estimate_max_eigenvalue(const SymTensor& t, const PowerIterationOptions& opts = {});

}  // namespace hbtensor
