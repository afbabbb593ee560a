#include "patchant/media.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "patchant/error.hpp"

namespace patchant {
namespace {

constexpr double kThinAnchorEps = 2.32;
constexpr double kThinAnchorRatio = 0.09;
constexpr double kHighAnchorEps = 10.0;
constexpr double kHighAnchorRatio = 0.03;

void check_frequency(double f_hz) {
  if (!(f_hz > 0.0) || !std::isfinite(f_hz)) {
    fail(ErrorKind::Domain, "frequency must be positive and finite, got " + std::to_string(f_hz));
  }
}

}  // namespace

void SubstrateSpec::validate() const {
  if (!(eps_r >= 1.0) || !std::isfinite(eps_r)) {
    fail(ErrorKind::Domain, "substrate invariant eps_r >= 1 violated (eps_r = " +
                                std::to_string(eps_r) + ")");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    fail(ErrorKind::Domain, "substrate invariant h > 0 violated (h = " + std::to_string(h) + ")");
  }
  if (!(tan_delta >= 0.0) || !std::isfinite(tan_delta)) {
    fail(ErrorKind::Domain, "substrate invariant tan_delta >= 0 violated (tan_delta = " +
                                std::to_string(tan_delta) + ")");
  }
  if (!(sigma > 0.0)) {
    fail(ErrorKind::Domain, "substrate invariant sigma > 0 violated (sigma = " +
                                std::to_string(sigma) + ")");
  }
}

std::string_view to_string(Regime regime) noexcept {
  return regime == Regime::Thick ? "thick" : "thin";
}

double free_space_wavelength(double f_hz) {
  check_frequency(f_hz);
  return constants::c / f_hz;
}

double wavenumber(double f_hz) {
  check_frequency(f_hz);
  return 2.0 * std::numbers::pi * f_hz / constants::c;
}

double thick_threshold(double eps_r) {
  if (!(eps_r >= 1.0)) fail(ErrorKind::Domain, "eps_r must be >= 1");
  const double u_lo = 1.0 / std::sqrt(kThinAnchorEps);
  const double u_hi = 1.0 / std::sqrt(kHighAnchorEps);
  const double u = 1.0 / std::sqrt(eps_r);
  const double t = kHighAnchorRatio + (u - u_hi) * (kThinAnchorRatio - kHighAnchorRatio) / (u_lo - u_hi);
  return std::clamp(t, kHighAnchorRatio, kThinAnchorRatio);
}

RegimeReport thickness_regime(const SubstrateSpec& sub, double f_hz) {
  sub.validate();
  RegimeReport report;
  report.ratio = sub.h / free_space_wavelength(f_hz);
  report.threshold = thick_threshold(sub.eps_r);
  report.regime = report.ratio > report.threshold ? Regime::Thick : Regime::Thin;
  return report;
}

}  // namespace patchant
