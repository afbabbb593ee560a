#pragma once

#include <functional>

namespace patchant::specfun {

inline constexpr double kDefaultRootTolerance = 1e-10;
inline constexpr int kMaxBisectionIterations = 100;

/// Closed interval [lo, hi] across which a function changes sign.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Bessel function of the first kind J_n(x) for integer n >= 0.
///
/// Ascending power series for |x| <= 12; beyond that, Miller's backward
/// recurrence normalised with J_0 + 2 sum J_2k = 1. Absolute error stays
/// below 1e-10 for |x| <= 30, which covers every argument the patch models
/// produce (all below ~3). Throws ErrorKind::Domain for n < 0 or non-finite x.
double bessel_j(int n, double x);

/// J_n'(x) from J_n' = (J_{n-1} - J_{n+1}) / 2, and J_0' = -J_1.
double bessel_j_prime(int n, double x);

/// Smallest positive zero of J_n' (n >= 1). 1.84118378... for n = 1.
double jprime_first_root(int n, double tol = kDefaultRootTolerance);

/// Plain bisection. Deterministic and never leaves the bracket.
///
/// Throws ErrorKind::Bracket if f has the same sign at both ends and
/// ErrorKind::Convergence if the bracket is still wider than tol after
/// kMaxBisectionIterations halvings.
double find_root_bracketed(const std::function<double(double)>& f, Bracket bracket,
                           double tol = kDefaultRootTolerance);

}  // namespace patchant::specfun
