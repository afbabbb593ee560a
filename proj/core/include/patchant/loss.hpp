#pragma once

#include <string_view>

#include "patchant/media.hpp"

namespace patchant {

/// Series resistances of a patch at resonance. R_total is always the plain
/// sum of the four parts, and R_s = T1 * R_r.
struct ResistanceBreakdown {
  double R_r = 0.0;  // radiation
  double R_s = 0.0;  // surface wave
  double R_c = 0.0;  // conductor
  double R_d = 0.0;  // dielectric
  double R_total = 0.0;

  static ResistanceBreakdown from_parts(double r_r, double r_s, double r_c, double r_d) {
    return {r_r, r_s, r_c, r_d, r_r + r_s + r_c + r_d};
  }
};

/// Which bracket to use in the surface-wave loss factor T1.
///
/// AsPrinted repeats (1 + K1^2 h^2 / 3)^2 in both terms; Corrected uses
/// (1 - K1^2 h^2 / 3)^2 for the first one. AsPrinted is the default.
enum class SurfaceWaveForm { AsPrinted, Corrected };

std::string_view to_string(SurfaceWaveForm form) noexcept;
SurfaceWaveForm parse_surface_wave_form(std::string_view name);

struct SurfaceWave {
  double K1 = 0.0;  // rad/m
  double T1 = 0.0;  // P_s / P_r
};

/// Surface-wave wavenumber K1 and loss factor T1 for a grounded slab,
/// shared by the rectangular and circular models.
///
/// K1 = sqrt[(-eps_r^2 + eps_r sqrt(eps_r^2 + 4 k0^2 h^2 (eps_r - 1))) / (2 h^2)].
/// eps_r = 1 gives K1 = T1 = 0. T1 has a pole where K1 h = pi/2; hitting it
/// throws ErrorKind::Singularity.
SurfaceWave surface_wave_factor(const SubstrateSpec& sub, double f_hz,
                                SurfaceWaveForm form = SurfaceWaveForm::AsPrinted);

}  // namespace patchant
