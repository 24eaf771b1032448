#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "compspec/digraph.hpp"
#include "compspec/errors.hpp"

namespace compspec {

inline constexpr double kDefaultCertTol = 1e-12;
inline constexpr long kIterationCapFactor = 100;  // cap = 100 * n^2

/// Certified spectral-radius bracket from Collatz-Wielandt bounds:
/// lower_bound <= rho(D) <= upper_bound, with a positive eigenvector
/// approximation normalized to unit max-entry.
struct PerronCertificate {
  double rho_estimate = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::vector<double> vector;
  long iterations = 0;
};

/// Spectral radius of a strongly connected digraph.
///
/// Power iteration runs on A+I rather than A: the shift makes the matrix
/// primitive even for periodic digraphs (cycles), and rho(A) = rho(A+I) - 1.
/// Each step gives Collatz-Wielandt bounds
///   L = min_i ((A+I)x)_i / x_i - 1,   U = max_i ((A+I)x)_i / x_i - 1,
/// both valid brackets of rho(D); the running intersection is kept and the
/// iteration stops once the current step's bracket is within tol.
inline PerronCertificate spectral_radius(const Digraph& d,
                                         double tol = kDefaultCertTol) {
  if (tol <= 0) throw BadParamsError("tolerance must be positive");
  if (!is_strongly_connected(d)) throw NotStronglyConnectedError();
  const int n = d.vertex_count();
  if (n == 1) return {0.0, 0.0, 0.0, {1.0}, 0};

  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, up = static_cast<double>(n);
  const long cap = kIterationCapFactor * static_cast<long>(n) * n;
  for (long step = 1; step <= cap; ++step) {
    double step_lo = std::numeric_limits<double>::infinity();
    double step_up = -std::numeric_limits<double>::infinity();
    double max_y = 0.0;
    for (int i = 0; i < n; ++i) {
      double acc = x[i];
      for (int j : d.out(i)) acc += x[j];
      y[i] = acc;
      const double ratio = acc / x[i] - 1.0;
      step_lo = std::min(step_lo, ratio);
      step_up = std::max(step_up, ratio);
      max_y = std::max(max_y, acc);
    }
    lo = std::max(lo, step_lo);
    up = std::min(up, step_up);
    if (up < lo) up = lo;  // clamp float jitter on exact instances
    if (step_up - step_lo <= tol) {
      return {(lo + up) / 2.0, lo, up, x, step};
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] / max_y;
  }
  throw DidNotConvergeError(cap, up - lo);
}

/// Positive eigenvector approximation for rho(D), unit max-entry.
/// Satisfies ||A x - rho x||_inf <= 2 * tol at the certified estimate.
inline std::vector<double> perron_vector(const Digraph& d,
                                         double tol = kDefaultCertTol) {
  return spectral_radius(d, tol).vector;
}

/// A verified solution of the eigenvalue complementarity problem:
/// x >= 0, x != 0, A x >= lambda x (up to eps) and <x, Ax - lambda x> = 0
/// (up to eps). support lists the vertices where x > 0.
struct ComplementarityWitness {
  double lambda = 0.0;
  std::vector<double> x;
  std::vector<int> support;
};

/// Builds the witness for (lambda, support) and checks it numerically:
/// x is the Perron vector of the subdigraph induced by support, extended by
/// zeros. Verifies lambda against the certified radius of the induced
/// subdigraph, then the componentwise inequality and the complementarity
/// inner product. Any failed check raises WitnessInvalidError.
inline ComplementarityWitness verify_complementarity_eigenvalue(
    const Digraph& d, double lambda, std::vector<int> support, double eps) {
  if (eps <= 0) throw BadParamsError("eps must be positive");
  if (support.empty())
    throw WitnessInvalidError("support is empty", -1, 0.0);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  const auto induced = induced_subdigraph(d, support);
  if (!is_strongly_connected(induced.digraph))
    throw WitnessInvalidError(
        "support does not induce a strongly connected subdigraph", -1, 0.0);

  const auto cert =
      spectral_radius(induced.digraph, std::min(kDefaultCertTol, eps));
  if (std::abs(lambda - cert.rho_estimate) > eps)
    throw WitnessInvalidError("lambda does not match the induced radius", -1,
                              lambda - cert.rho_estimate);

  const int n = d.vertex_count();
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i)
    x[support[i]] = cert.vector[i];

  double inner = 0.0;
  for (int i = 0; i < n; ++i) {
    double w = -lambda * x[i];
    for (int j : d.out(i)) w += x[j];
    if (w < -eps)
      throw WitnessInvalidError("A x >= lambda x violated", i, w);
    inner += x[i] * w;
  }
  if (std::abs(inner) > eps)
    throw WitnessInvalidError("complementarity inner product nonzero", -1,
                              inner);
  return {lambda, std::move(x), std::move(support)};
}

}  // namespace compspec
