#include "patchant/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "patchant/error.hpp"

namespace patchant {

std::string_view to_string(SurfaceWaveForm form) noexcept {
  return form == SurfaceWaveForm::AsPrinted ? "t1-printed" : "t1-corrected";
}

SurfaceWaveForm parse_surface_wave_form(std::string_view name) {
  if (name == "t1-printed" || name == "printed") return SurfaceWaveForm::AsPrinted;
  if (name == "t1-corrected" || name == "corrected") return SurfaceWaveForm::Corrected;
  fail(ErrorKind::Configuration, "unknown surface-wave form '" + std::string(name) +
                                     "' (expected t1-printed or t1-corrected)");
}

SurfaceWave surface_wave_factor(const SubstrateSpec& sub, double f_hz, SurfaceWaveForm form) {
  sub.validate();
  const double k0 = wavenumber(f_hz);
  const double er = sub.eps_r;
  const double h = sub.h;

  const double k0h = k0 * h;
  const double radicand = -er * er + er * std::sqrt(er * er + 4.0 * k0h * k0h * (er - 1.0));
  // radicand is exactly zero for eps_r = 1 and positive otherwise; clamp rounding noise.
  const double k1 = std::sqrt(std::max(radicand, 0.0) / (2.0 * h * h));
  const double x = k1 * h;
  if (x == 0.0) return {0.0, 0.0};

  const double cos_x = std::cos(x);
  if (std::abs(cos_x) < 1e-12) {
    fail(ErrorKind::Singularity, "surface-wave factor T1 is singular at K1*h = " + std::to_string(x));
  }
  const double plus = 1.0 + x * x / 3.0;
  const double first = form == SurfaceWaveForm::AsPrinted ? plus : 1.0 - x * x / 3.0;
  const double scale = (x / er) * (x / er);
  const double t1 = scale * (first * first + plus * plus / (cos_x * cos_x));
  return {k1, t1};
}

}  // namespace patchant
