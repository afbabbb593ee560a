#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "patchant/loss.hpp"
#include "patchant/media.hpp"
#include "patchant/specfun.hpp"

namespace patchant::rect {

/// How the edge radiation resistance is obtained.
///
/// Literal: R_r = Z0w * lambda0 / (2 pi L_ef).
/// Calibrated: the same value times kCalibratedRadiationScale, the single
/// constant that brings the 39 GHz reference patch (eps_r 4.7, h 0.8 mm,
/// L 1.06 mm, W 0.98 mm) to R_in = 50 ohm with its feed 0.05 mm in from the
/// radiating edge.
enum class RadiationModel { Literal, Calibrated };

/// Width synthesis: W = lambda0 / (2 pi) * [ln(lambda0 / h) - 1] * g(eps_eff)
/// with g = eps_eff^-1/2 (InverseSqrtEps, default) or g = eps_eff (AsPrinted).
enum class WidthFormula { InverseSqrtEps, AsPrinted };

std::string_view to_string(RadiationModel model) noexcept;
std::string_view to_string(WidthFormula formula) noexcept;
RadiationModel parse_radiation_model(std::string_view name);
WidthFormula parse_width_formula(std::string_view name);

inline constexpr double kCalibratedRadiationScale = 0.7039664150863543;

struct RectModel {
  RadiationModel radiation = RadiationModel::Calibrated;
  SurfaceWaveForm surface_wave = SurfaceWaveForm::AsPrinted;
};

/// Rectangular patch. Lengths in metres; feed_offset_a is measured from the
/// radiating edge inward along L.
struct RectPatchDesign {
  double L = 0.0;
  double W = 0.0;
  double feed_offset_a = 0.0;
  SubstrateSpec substrate;
  double f_design = 0.0;

  void validate() const;
};

/// Intermediates of the thick-substrate resistance model, kept for reporting.
struct RectDerived {
  double eps_eff = 0.0;   // synthesis effective permittivity
  double eps_ew = 0.0;    // analysis effective permittivity
  double Q_r = 0.0;
  double Z0w = 0.0;       // substrate-filled strip impedance, ohm
  double Z0a = 0.0;       // air-filled strip impedance, ohm
  double W_eq = 0.0;
  double L_ef = 0.0;
  double delta_L = 0.0;
  double K1 = 0.0;
  double T1 = 0.0;
  double lambda_d = 0.0;  // lambda0 / sqrt(eps_r)
};

struct RectAnalysis {
  ResistanceBreakdown breakdown;
  RectDerived derived;
  double R_in = 0.0;  // resistance seen at the feed
};

RectPatchDesign synth_rect(double f0_hz, const SubstrateSpec& sub,
                           WidthFormula width = WidthFormula::InverseSqrtEps);

/// 0.5 [(eps_r + 1) + (eps_r - 1)(1 + (10 h / L)^2)^-1/2]
double eps_effective(const SubstrateSpec& sub, double length);

/// Q_r = lambda0 / (4 h) * sqrt(eps), eps being the analysis permittivity.
double q_radiation(double eps, double h, double f_hz);

/// R_c = 0.00027 (L/W) Q_r^2 sqrt(f / GHz). Independent of sigma.
double r_conductor_rect(const RectPatchDesign& design, double f_hz);

/// R_d = R_c tan_delta h sqrt(pi f mu0 sigma), the P_d / P_c ratio of a
/// cavity with the same stored energy.
double r_dielectric_rect(const RectPatchDesign& design, double f_hz);

/// Zero-thickness strip of width W on a slab (eps_r, h). Narrow-strip
/// expression for W/h <= 3.3, wide-strip expression above. eps_r = 1 gives
/// the air-filled impedance.
double strip_impedance(double eps_r, double h, double width);

/// W_eq = eta0 h / (Z0w sqrt(eps_ew)).
double equivalent_width(const RectPatchDesign& design);

/// L_ef = L + (W_eq - W)/2 * (eps_ew + 0.9)/(eps_ew - 0.299).
double effective_length(const RectPatchDesign& design);

/// Edge radiation resistance under the chosen model.
double r_radiation_rect(const RectPatchDesign& design, double f_hz, RadiationModel model);

/// dL = 0.412 h (eps_ew + 0.9)/(eps_ew - 0.299) (L/h + 0.264)/(L/h + 0.813).
double edge_extension(const RectPatchDesign& design);

/// The feed-position expression evaluated as written, in ohm:
/// eta0 L_ef / (lambda0 (eps_ew - 1/eps_ew)) * {1 - sin 2x / sin x} / {1 - cos 2x}
/// with x = k0 (a + dL). Its sign is negative for x < pi/3.
double feed_position_resistance(const RectPatchDesign& design, double f_hz, double feed_offset);

/// |feed_position_resistance(a)| / |feed_position_resistance(0)|: 1 at the
/// radiating edge, falling toward the centre.
double feed_taper(const RectPatchDesign& design, double f_hz, double feed_offset);

/// R_in(a) = R_r * taper(a) + R_s + R_c + R_d at the design's feed offset.
double input_resistance_rect(const RectPatchDesign& design, double f_hz, const RectModel& model);

RectAnalysis analyze_rect(const RectPatchDesign& design, double f_hz, const RectModel& model);

/// f_r = c / (2 (L + 2 dL) sqrt(eps_r)).
double resonant_frequency_rect(const RectPatchDesign& design);

/// Feed offset in [0, L/2] at which R_in equals target_ohm.
/// Throws ErrorKind::NoSolution when target is outside the reachable range.
double feed_offset_for_match(const RectPatchDesign& design, double f_hz, double target_ohm,
                             const RectModel& model,
                             double tol = specfun::kDefaultRootTolerance);

/// Edge-of-validity notes for reports (thin substrate, taper past its zero).
std::vector<std::string> model_warnings(const RectPatchDesign& design, double f_hz);

}  // namespace patchant::rect
