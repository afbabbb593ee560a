#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "patchant/loss.hpp"
#include "patchant/media.hpp"
#include "patchant/specfun.hpp"

namespace patchant::circ {

/// Fringing correction of the disk radius. Off reproduces the bare
/// resonance condition J1'(k0 a sqrt(eps_r)) = 0.
enum class Fringing { On, Off };

/// Which resistance the J1^2 feed taper is applied to when placing the feed.
///
/// Radiation follows R_in = R_r J1^2(k11 rho0) / J1^2(k11 a) as written;
/// Total scales R_T instead. The resistance actually seen at the feed is
/// always R_T times the taper, so with Radiation placement the match is off
/// by R_T / R_r.
enum class FeedBasis { Radiation, Total };

std::string_view to_string(Fringing fringing) noexcept;
std::string_view to_string(FeedBasis basis) noexcept;
FeedBasis parse_feed_basis(std::string_view name);

struct CircModel {
  Fringing fringing = Fringing::On;
  SurfaceWaveForm surface_wave = SurfaceWaveForm::AsPrinted;
  FeedBasis feed_basis = FeedBasis::Radiation;
};

/// Reference edge field used when reporting absolute powers. Every
/// resistance, efficiency and directivity is independent of it.
inline constexpr double kReferenceField = 1.0;  // V/m

/// Circular patch in its TM11 mode. Lengths in metres.
struct CircPatchDesign {
  double a = 0.0;      // physical disk radius
  double a_eff = 0.0;  // radius including fringing
  double rho0 = 0.0;   // radial feed position
  SubstrateSpec substrate;
  double f_design = 0.0;
  int mode_n = 1;

  void validate() const;
};

struct CavityField {
  double E0 = 0.0;
  double k = 0.0;    // in-cavity wavenumber meeting the resonance condition
  double k11 = 0.0;  // 1.84118 / a_eff
};

struct FarField {
  double E_theta = 0.0;  // magnitudes at r = 1 m
  double E_phi = 0.0;
};

/// The printed closed forms next to the values actually used.
struct PrintedLossCheck {
  double W_T_closed_form = 0.0;  // at the reference field
  double W_T_ratio = 0.0;        // closed form / quadrature
  double R_d_printed = 0.0;
  double R_c_printed = 0.0;
  double R_d_power_route = 0.0;  // (E0 h)^2 / (2 P_d)
  double R_c_power_route = 0.0;  // (E0 h)^2 / (2 P_c)
};

struct CircLossReport {
  double P_r = 0.0;  // powers and energy at kReferenceField
  double P_s = 0.0;
  double P_c = 0.0;
  double P_d = 0.0;
  double W_T = 0.0;
  ResistanceBreakdown breakdown;
  double e_r = 0.0;
  double D = 0.0;
  double G = 0.0;
  double Q_T = 0.0;
  double R_in = 0.0;  // R_T times the feed taper at rho0
  PrintedLossCheck printed;
};

enum class Plane { E, H };

struct PatternPoint {
  double theta = 0.0;   // rad, negative on the far side of broadside
  double rel_db = 0.0;  // -inf where the field vanishes
};

/// First zero of J1', 1.8411837813...
double tm11_root();

/// a_eff = a sqrt(1 + 2h/(pi a eps_r) (ln(pi a / 2h) + 1.7726)).
double effective_radius(double a, const SubstrateSpec& sub);

/// f_r = 1.84118 c / (2 pi a_eff sqrt(eps_r)).
double resonant_frequency(double a, const SubstrateSpec& sub, Fringing fringing = Fringing::On);

/// Physical radius resonating at f0. Closed form without fringing,
/// bisection on resonant_frequency with it.
double resonant_radius(double f0_hz, const SubstrateSpec& sub, Fringing fringing = Fringing::On,
                       double tol = specfun::kDefaultRootTolerance);

/// Design record for radius a with the feed at the centre (rho0 = 0).
CircPatchDesign make_circ_design(double a, const SubstrateSpec& sub, double f_design_hz,
                                 Fringing fringing = Fringing::On);

/// Resonant radius for f0 plus the feed radius giving target_ohm under
/// model.feed_basis.
CircPatchDesign synth_circ(double f0_hz, const SubstrateSpec& sub, const CircModel& model,
                           double target_ohm = 50.0);

CavityField cavity_field(const CircPatchDesign& design, double e0);

/// 4/3 - (8/15) x^2 + (11/105) x^4 with x = k0 a_eff.
double radiation_series(double k0a);

/// P_r = pi^3 a^2 (E0 h)^2 / (2 lambda0^2 eta0) * radiation_series(k0 a), a = a_eff.
double p_radiated(const CircPatchDesign& design, double f_hz, double e0);

/// R_r = (E0 h)^2 / (2 P_r); throws ErrorKind::ModelRange if the series is not positive.
double r_radiation_circ(const CircPatchDesign& design, double f_hz);

double r_surface_circ(const CircPatchDesign& design, double f_hz,
                      SurfaceWaveForm form = SurfaceWaveForm::AsPrinted);

/// Stored energy (eps0 eps_r h pi E0^2 / 2) * integral_0^a_eff J1^2(k rho) rho d rho,
/// evaluated by composite Simpson quadrature.
double stored_energy(const CircPatchDesign& design, double e0);

/// E0^2 h / (8 omega f mu0) J1^2(k a)((k a)^2 - 1) with k a = 1.84118.
double stored_energy_closed_form(const CircPatchDesign& design, double f_hz, double e0);

double p_dielectric(const CircPatchDesign& design, double f_hz, double e0);  // omega tan_delta W_T
double p_conductor(const CircPatchDesign& design, double f_hz, double e0);   // omega W_T / (h sqrt(pi f mu0 sigma))

/// Loss resistances in series with R_r, proportional to the dissipated
/// power: R_x = R_r * P_x / P_r.
double r_dielectric_circ(const CircPatchDesign& design, double f_hz);
double r_conductor_circ(const CircPatchDesign& design, double f_hz);

PrintedLossCheck printed_loss_check(const CircPatchDesign& design, double f_hz);

ResistanceBreakdown r_total_circ(const CircPatchDesign& design, double f_hz,
                                 SurfaceWaveForm form = SurfaceWaveForm::AsPrinted);

/// Q_T = omega W_T / (P_r + P_s + P_c + P_d).
double total_q(const CircPatchDesign& design, double f_hz,
               SurfaceWaveForm form = SurfaceWaveForm::AsPrinted);

/// J1^2(k11 rho) / J1^2(k11 a_eff).
double feed_taper(const CircPatchDesign& design, double rho);

/// The basis resistance (R_r or R_T) times the taper at rho.
double feed_resistance(const CircPatchDesign& design, double f_hz, double rho, const CircModel& model);

/// R_T times the taper at design.rho0.
double input_resistance_circ(const CircPatchDesign& design, double f_hz, const CircModel& model);

/// Feed radius in [0, a] where feed_resistance equals target_ohm.
double feed_radius_for_match(const CircPatchDesign& design, double f_hz, double target_ohm,
                             const CircModel& model,
                             double tol = specfun::kDefaultRootTolerance);

/// TM11 cavity far fields at r = 1 m for 0 <= theta <= pi/2:
///   E_theta = C cos(phi) [J0(x) - J2(x)]
///   E_phi   = C cos(theta) sin(phi) [J0(x) + J2(x)]
/// with x = k0 a_eff sin(theta) and C = k0 a_eff E0 h / 2.
FarField far_fields(const CircPatchDesign& design, double f_hz, double e0, double theta, double phi);

/// Broadside directivity against p_radiated.
double directivity(const CircPatchDesign& design, double f_hz);

double efficiency(const CircPatchDesign& design, double f_hz,
                  SurfaceWaveForm form = SurfaceWaveForm::AsPrinted);
double gain(const CircPatchDesign& design, double f_hz,
            SurfaceWaveForm form = SurfaceWaveForm::AsPrinted);

CircLossReport analyze_circ(const CircPatchDesign& design, double f_hz, const CircModel& model);

/// Principal-plane cut from -pi/2 to pi/2, normalised to 0 dB at broadside.
/// E plane: |E_theta| at phi = 0 (phi = pi for theta < 0). H plane: |E_phi| at phi = pi/2.
std::vector<PatternPoint> pattern_cut(const CircPatchDesign& design, double f_hz, Plane plane,
                                      double step);

std::vector<std::string> model_warnings(const CircPatchDesign& design, double f_hz);

}  // namespace patchant::circ
