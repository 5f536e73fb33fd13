#include "hbtensor/spectral.hpp"

#include "hbtensor/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hbtensor {

Rational delta_star_closed_form(Approach approach, unsigned r_h, const std::map<unsigned, BigInt>& distribution) {
  Rational result = 0;
  for (const auto& [level, count] : distribution) {
    if (level >= r_h) continue;
    const Rational c(count);
    switch (approach) {
      case Approach::straightforward: result += (r_h - level) * c; break;
      case Approach::silo: result = std::max(result, Rational((r_h - level) * c)); break;
      case Approach::layered: result += c; break;
    }
  }
  return result;
}

SpectralBoundReport spectral_bound(const SymTensor& t, const UniformisationTrace& trace) {
  SpectralBoundReport report;
  report.approach = trace.approach;
  report.r_h = trace.r_h;
  if (t.order() != trace.r_h || t.dim() != trace.dim()) {
    throw Error(ErrorKind::TraceMismatch, "tensor shape differs from the trace");
  }
  for (std::size_t i = 0; i < trace.n(); ++i) report.delta = std::max(report.delta, row_sum(t, i));
  for (std::size_t i = trace.n(); i < trace.dim(); ++i) report.delta_star = std::max(report.delta_star, row_sum(t, i));
  report.bound = std::max(report.delta, report.delta_star) + trace.r_h;
  try {
    report.delta_star_closed =
        delta_star_closed_form(trace.approach, trace.r_h, edge_distribution(t, trace, t.nnz()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TraceMismatch) throw;
  }
  return report;
}

namespace {

// Flattened contraction terms: out[row] += coeff * prod x[factor].
struct ContractionPlan {
  struct Term {
    std::size_t row;
    double coeff;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };
  std::vector<Term> terms;
  std::size_t dim = 0;

  explicit ContractionPlan(const SymTensor& t) : dim(t.dim()) {
    const auto r = t.order();
    for (const auto& [idx, value] : t.entries()) {
      if (value < 0) throw Error(ErrorKind::Precondition, "power iteration needs nonnegative entries");
      const auto runs = run_length(idx);
      const BigInt perms = permutation_count(idx);
      for (const auto& [i, mu] : runs) {
        Term term{i, to_double(value * Rational(perms * mu, BigInt(r))), {}};
        for (const auto& [j, nu] : runs) {
          const unsigned power = j == i ? nu - 1 : nu;
          if (power != 0) term.factors.emplace_back(j, power);
        }
        terms.push_back(std::move(term));
      }
    }
  }

  void apply(const std::vector<double>& x, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& term : terms) {
      double v = term.coeff;
      for (const auto& [j, power] : term.factors) v *= std::pow(x[j], static_cast<double>(power));
      out[term.row] += v;
    }
  }
};

void normalize_max(std::vector<double>& x) {
  const double top = *std::max_element(x.begin(), x.end());
  if (top > 0) {
    for (double& v : x) v /= top;
  }
}

}  // namespace

PowerIterationResult estimate_max_eigenvalue(const SymTensor& t, const PowerIterationOptions& opts) {
  if (t.order() < 2) throw Error(ErrorKind::Precondition, "power iteration needs order >= 2");
  PowerIterationResult result;
  if (t.dim() == 0 || t.nnz() == 0) {
    result.converged = true;
    return result;
  }
  const ContractionPlan plan(t);
  const double degree = static_cast<double>(t.order() - 1);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> start(0.5, 1.5);
  std::vector<double> x(t.dim());
  for (double& v : x) v = start(rng);
  normalize_max(x);

  std::vector<double> y(t.dim());
  std::vector<double> next(t.dim());
  result.lambda = 0.0;
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    plan.apply(x, y);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double xr1 = std::pow(x[i], degree);
      num += x[i] * y[i];
      den += xr1 * x[i];
      // Unit shift keeps the iteration primitive on reducible tensors.
      next[i] = std::pow(y[i] + xr1, 1.0 / degree);
    }
    if (den > 0) result.lambda = std::max(result.lambda, num / den);
    normalize_max(next);
    double step = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) step = std::max(step, std::abs(next[i] - x[i]));
    x.swap(next);
    result.iterations = it;
    if (step < opts.tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace hbtensor
