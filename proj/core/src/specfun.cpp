#include "patchant/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "patchant/error.hpp"

namespace patchant::specfun {
namespace {

constexpr double kSeriesLimit = 12.0;
constexpr int kMaxSeriesTerms = 300;

void check_args(int n, double x) {
  if (n < 0) fail(ErrorKind::Domain, "bessel order must be non-negative, got " + std::to_string(n));
  if (!std::isfinite(x)) fail(ErrorKind::Domain, "bessel argument must be finite");
}

// sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!), for 0 <= x <= kSeriesLimit.
double series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  if (term == 0.0) return 0.0;

  const double q = half * half;
  double sum = term;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    term *= -q / (static_cast<double>(k) * (k + n));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's algorithm: recur downward from an order well above max(n, x),
// normalise with J_0 + 2 (J_2 + J_4 + ...) = 1.
double miller(int n, double x) {
  const int top = std::max(n, static_cast<int>(x));
  int start = top + 20 + static_cast<int>(std::sqrt(60.0 * top));
  start += start % 2;

  constexpr double kRescale = 1e-250;
  double next = 0.0;   // J_{k+1}
  double cur = 1e-30;  // J_k
  double norm = 0.0;
  double wanted = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k / x) * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e250) {
      cur *= kRescale;
      next *= kRescale;
      norm *= kRescale;
      wanted *= kRescale;
    }
    const int order = k - 1;
    if (order == n) wanted = cur;
    if (order > 0 && order % 2 == 0) norm += 2.0 * cur;
  }
  norm += cur;
  return wanted / norm;
}

}  // namespace

double bessel_j(int n, double x) {
  check_args(n, x);
  const double ax = std::abs(x);
  const double value = ax <= kSeriesLimit ? series(n, ax) : miller(n, ax);
  return (x < 0.0 && n % 2 == 1) ? -value : value;
}

double bessel_j_prime(int n, double x) {
  check_args(n, x);
  if (n == 0) return -bessel_j(1, x);
  return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

double jprime_first_root(int n, double tol) {
  if (n < 1) {
    fail(ErrorKind::Domain, "jprime_first_root supports orders n >= 1, got " + std::to_string(n));
  }
  // J_n' > 0 on (0, j'_{n,1}) and j'_{n,1} > n; walk forward to the first
  // sign change, which is well short of the second zero.
  constexpr double kStep = 0.25;
  double lo = static_cast<double>(n);
  double hi = lo + kStep;
  while (bessel_j_prime(n, hi) > 0.0) {
    lo = hi;
    hi += kStep;
  }
  return find_root_bracketed([n](double x) { return bessel_j_prime(n, x); }, {lo, hi}, tol);
}

double find_root_bracketed(const std::function<double(double)>& f, Bracket bracket, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    fail(ErrorKind::Domain, "root tolerance must be positive and finite");
  }
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(lo < hi)) {
    fail(ErrorKind::Bracket, "bracket requires lo < hi, got [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
  }

  double flo = f(lo);
  const double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi)) fail(ErrorKind::Domain, "function is NaN at a bracket end");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    fail(ErrorKind::Bracket, "no sign change across [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
  }

  for (int iter = 0; iter <= kMaxBisectionIterations; ++iter) {
    if (hi - lo <= tol) return lo + 0.5 * (hi - lo);
    if (iter == kMaxBisectionIterations) break;
    const double mid = lo + 0.5 * (hi - lo);
    const double fmid = f(mid);
    if (std::isnan(fmid)) fail(ErrorKind::Domain, "function is NaN inside the bracket");
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  fail(ErrorKind::Convergence, "bisection did not reach tolerance " + std::to_string(tol) +
                                   " within " + std::to_string(kMaxBisectionIterations) +
                                   " iterations");
}

}  // namespace patchant::specfun
