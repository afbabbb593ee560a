#include "patchant/circpatch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "patchant/error.hpp"

namespace patchant::circ {
namespace {

using std::numbers::pi;
using specfun::bessel_j;

constexpr double kFringeConstant = 1.7726;
constexpr int kStoredEnergyIntervals = 2000;  // even, for Simpson
constexpr double kSeriesWarnLimit = 1.8;

double angular(double f_hz) { return 2.0 * pi * f_hz; }

// Fringing factor under the square root; <= 0 means the correction is meaningless.
double fringe_inner(double a, const SubstrateSpec& sub) {
  const double h = sub.h;
  return 1.0 + 2.0 * h / (pi * a * sub.eps_r) * (std::log(pi * a / (2.0 * h)) + kFringeConstant);
}

double skin_factor(const SubstrateSpec& sub, double f_hz) {
  return std::sqrt(pi * f_hz * constants::mu0 * sub.sigma);
}

double edge_voltage_sq(const CircPatchDesign& design, double e0) {
  const double v = e0 * design.substrate.h;
  return v * v;
}

}  // namespace

std::string_view to_string(Fringing fringing) noexcept {
  return fringing == Fringing::On ? "fringing" : "no-fringing";
}

std::string_view to_string(FeedBasis basis) noexcept {
  return basis == FeedBasis::Radiation ? "feed-radiation" : "feed-total";
}

FeedBasis parse_feed_basis(std::string_view name) {
  if (name == "feed-radiation" || name == "radiation") return FeedBasis::Radiation;
  if (name == "feed-total" || name == "total") return FeedBasis::Total;
  fail(ErrorKind::Configuration, "unknown feed basis '" + std::string(name) +
                                     "' (expected feed-radiation or feed-total)");
}

void CircPatchDesign::validate() const {
  substrate.validate();
  if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorKind::Domain, "circ invariant a > 0 violated");
  if (!(a_eff >= a)) fail(ErrorKind::Domain, "circ invariant a <= a_eff violated");
  if (!(rho0 >= 0.0) || rho0 > a) {
    fail(ErrorKind::Domain, "circ invariant 0 <= rho0 <= a violated (rho0 = " +
                                std::to_string(rho0) + " m)");
  }
  if (mode_n != 1) fail(ErrorKind::Domain, "only the TM11 mode (mode_n = 1) is modelled");
  if (!(f_design > 0.0)) fail(ErrorKind::Domain, "circ invariant f_design > 0 violated");
}

double tm11_root() {
  static const double root = specfun::jprime_first_root(1, 1e-13);
  return root;
}

double effective_radius(double a, const SubstrateSpec& sub) {
  sub.validate();
  if (!(a > 0.0) || !std::isfinite(a)) {
    fail(ErrorKind::Domain, "disk radius must be positive, got " + std::to_string(a));
  }
  const double inner = fringe_inner(a, sub);
  if (!(inner > 0.0)) {
    fail(ErrorKind::ModelRange, "fringing correction undefined for a = " + std::to_string(a) +
                                    " m on h = " + std::to_string(sub.h) + " m");
  }
  return a * std::sqrt(inner);
}

double resonant_frequency(double a, const SubstrateSpec& sub, Fringing fringing) {
  const double radius = fringing == Fringing::On ? effective_radius(a, sub) : a;
  if (!(radius > 0.0)) fail(ErrorKind::Domain, "disk radius must be positive");
  return tm11_root() * constants::c / (2.0 * pi * radius * std::sqrt(sub.eps_r));
}

double resonant_radius(double f0_hz, const SubstrateSpec& sub, Fringing fringing, double tol) {
  sub.validate();
  const double bare = tm11_root() / (wavenumber(f0_hz) * std::sqrt(sub.eps_r));
  if (fringing == Fringing::Off) return bare;

  // a_eff(a) is increasing once the fringing factor is positive, so step the
  // lower end out of the region where the correction is undefined.
  double lo = 0.1 * bare;
  const double hi = 10.0 * bare;
  while (fringe_inner(lo, sub) <= 0.0 && lo < hi) lo *= 1.25;
  auto mismatch = [&](double a) { return resonant_frequency(a, sub, Fringing::On) / f0_hz - 1.0; };
  try {
    return specfun::find_root_bracketed(mismatch, {lo, hi}, tol);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Convergence) throw;
    fail(ErrorKind::Synthesis, std::string("resonant radius search failed: ") + e.what());
  }
}

CircPatchDesign make_circ_design(double a, const SubstrateSpec& sub, double f_design_hz,
                                 Fringing fringing) {
  CircPatchDesign design;
  design.a = a;
  design.a_eff = fringing == Fringing::On ? effective_radius(a, sub) : a;
  design.substrate = sub;
  design.f_design = f_design_hz;
  design.validate();
  return design;
}

CircPatchDesign synth_circ(double f0_hz, const SubstrateSpec& sub, const CircModel& model,
                           double target_ohm) {
  const double a = resonant_radius(f0_hz, sub, model.fringing);
  CircPatchDesign design = make_circ_design(a, sub, f0_hz, model.fringing);
  design.rho0 = feed_radius_for_match(design, f0_hz, target_ohm, model);
  return design;
}

CavityField cavity_field(const CircPatchDesign& design, double e0) {
  const double k11 = tm11_root() / design.a_eff;
  return {e0, k11, k11};
}

double radiation_series(double k0a) {
  const double x2 = k0a * k0a;
  return 4.0 / 3.0 - (8.0 / 15.0) * x2 + (11.0 / 105.0) * x2 * x2;
}

double p_radiated(const CircPatchDesign& design, double f_hz, double e0) {
  design.validate();
  const double lambda0 = free_space_wavelength(f_hz);
  const double a = design.a_eff;
  const double series = radiation_series(wavenumber(f_hz) * a);
  return pi * pi * pi * a * a * edge_voltage_sq(design, e0) / (2.0 * lambda0 * lambda0 * constants::eta0) *
         series;
}

double r_radiation_circ(const CircPatchDesign& design, double f_hz) {
  const double series = radiation_series(wavenumber(f_hz) * design.a_eff);
  if (!(series > 0.0)) {
    fail(ErrorKind::ModelRange, "radiated-power series is not positive at k0 a_eff = " +
                                    std::to_string(wavenumber(f_hz) * design.a_eff));
  }
  return edge_voltage_sq(design, kReferenceField) / (2.0 * p_radiated(design, f_hz, kReferenceField));
}

double r_surface_circ(const CircPatchDesign& design, double f_hz, SurfaceWaveForm form) {
  return surface_wave_factor(design.substrate, f_hz, form).T1 * r_radiation_circ(design, f_hz);
}

double stored_energy(const CircPatchDesign& design, double e0) {
  design.validate();
  const double k = cavity_field(design, e0).k;
  const double a = design.a_eff;
  const int n = kStoredEnergyIntervals;
  const double step = a / n;
  auto integrand = [k](double rho) {
    const double j = bessel_j(1, k * rho);
    return j * j * rho;
  };
  double sum = integrand(0.0) + integrand(a);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * step);
  const double integral = sum * step / 3.0;
  const auto& sub = design.substrate;
  return constants::eps0 * sub.eps_r * sub.h * pi * e0 * e0 / 2.0 * integral;
}

double stored_energy_closed_form(const CircPatchDesign& design, double f_hz, double e0) {
  design.validate();
  const double ka = tm11_root();
  const double j = bessel_j(1, ka);
  const int n = design.mode_n;
  return e0 * e0 * design.substrate.h / (8.0 * angular(f_hz) * f_hz * constants::mu0) * j * j *
         (ka * ka - n * n);
}

double p_dielectric(const CircPatchDesign& design, double f_hz, double e0) {
  return angular(f_hz) * design.substrate.tan_delta * stored_energy(design, e0);
}

double p_conductor(const CircPatchDesign& design, double f_hz, double e0) {
  const double skin = skin_factor(design.substrate, f_hz);
  if (std::isinf(skin)) return 0.0;
  return angular(f_hz) * stored_energy(design, e0) / (design.substrate.h * skin);
}

double r_dielectric_circ(const CircPatchDesign& design, double f_hz) {
  return r_radiation_circ(design, f_hz) * p_dielectric(design, f_hz, kReferenceField) /
         p_radiated(design, f_hz, kReferenceField);
}

double r_conductor_circ(const CircPatchDesign& design, double f_hz) {
  return r_radiation_circ(design, f_hz) * p_conductor(design, f_hz, kReferenceField) /
         p_radiated(design, f_hz, kReferenceField);
}

PrintedLossCheck printed_loss_check(const CircPatchDesign& design, double f_hz) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const auto& sub = design.substrate;
  const double ka = tm11_root();
  const double j = bessel_j(1, ka);
  const double mode = j * j * (ka * ka - 1.0);
  const double base = 4.0 * constants::mu0 * f_hz * sub.h;
  const double skin = skin_factor(sub, f_hz);

  PrintedLossCheck out;
  out.W_T_closed_form = stored_energy_closed_form(design, f_hz, kReferenceField);
  out.W_T_ratio = out.W_T_closed_form / stored_energy(design, kReferenceField);
  out.R_d_printed = sub.tan_delta > 0.0 ? base / (sub.tan_delta * mode) : inf;
  out.R_c_printed = base * sub.h * skin / mode;

  const double v2 = edge_voltage_sq(design, kReferenceField);
  const double p_d = p_dielectric(design, f_hz, kReferenceField);
  const double p_c = p_conductor(design, f_hz, kReferenceField);
  out.R_d_power_route = p_d > 0.0 ? v2 / (2.0 * p_d) : inf;
  out.R_c_power_route = p_c > 0.0 ? v2 / (2.0 * p_c) : inf;
  return out;
}

ResistanceBreakdown r_total_circ(const CircPatchDesign& design, double f_hz, SurfaceWaveForm form) {
  const double r_r = r_radiation_circ(design, f_hz);
  const double t1 = surface_wave_factor(design.substrate, f_hz, form).T1;
  return ResistanceBreakdown::from_parts(r_r, t1 * r_r, r_conductor_circ(design, f_hz),
                                         r_dielectric_circ(design, f_hz));
}

double total_q(const CircPatchDesign& design, double f_hz, SurfaceWaveForm form) {
  const double e0 = kReferenceField;
  const double p_r = p_radiated(design, f_hz, e0);
  const double t1 = surface_wave_factor(design.substrate, f_hz, form).T1;
  const double lost = p_r * (1.0 + t1) + p_conductor(design, f_hz, e0) + p_dielectric(design, f_hz, e0);
  return angular(f_hz) * stored_energy(design, e0) / lost;
}

double feed_taper(const CircPatchDesign& design, double rho) {
  const double k11 = cavity_field(design, kReferenceField).k11;
  const double edge = bessel_j(1, k11 * design.a_eff);
  const double here = bessel_j(1, k11 * rho);
  return (here * here) / (edge * edge);
}

double feed_resistance(const CircPatchDesign& design, double f_hz, double rho, const CircModel& model) {
  const double basis = model.feed_basis == FeedBasis::Radiation
                           ? r_radiation_circ(design, f_hz)
                           : r_total_circ(design, f_hz, model.surface_wave).R_total;
  return basis * feed_taper(design, rho);
}

double input_resistance_circ(const CircPatchDesign& design, double f_hz, const CircModel& model) {
  design.validate();
  return r_total_circ(design, f_hz, model.surface_wave).R_total * feed_taper(design, design.rho0);
}

double feed_radius_for_match(const CircPatchDesign& design, double f_hz, double target_ohm,
                             const CircModel& model, double tol) {
  design.validate();
  if (!(target_ohm >= 0.0)) fail(ErrorKind::Domain, "target resistance must be non-negative");
  if (target_ohm == 0.0) return 0.0;
  const double at_edge = feed_resistance(design, f_hz, design.a, model);
  if (target_ohm > at_edge) {
    fail(ErrorKind::NoSolution, "target " + std::to_string(target_ohm) +
                                    " ohm exceeds the edge resistance " + std::to_string(at_edge) +
                                    " ohm");
  }
  if (target_ohm == at_edge) return design.a;
  auto residual = [&](double rho) { return feed_resistance(design, f_hz, rho, model) - target_ohm; };
  return specfun::find_root_bracketed(residual, {0.0, design.a}, tol);
}

FarField far_fields(const CircPatchDesign& design, double f_hz, double e0, double theta, double phi) {
  if (!(theta >= 0.0) || theta > pi / 2.0 + 1e-12) {
    fail(ErrorKind::Domain, "far field is defined on the upper hemisphere only (theta = " +
                                std::to_string(theta) + ")");
  }
  const double k0a = wavenumber(f_hz) * design.a_eff;
  const double x = k0a * std::sin(theta);
  const double j0 = bessel_j(0, x);
  const double j2 = bessel_j(2, x);
  const double scale = k0a * e0 * design.substrate.h / 2.0;
  return {std::abs(scale * std::cos(phi) * (j0 - j2)),
          std::abs(scale * std::cos(theta) * std::sin(phi) * (j0 + j2))};
}

double directivity(const CircPatchDesign& design, double f_hz) {
  const FarField broadside = far_fields(design, f_hz, kReferenceField, 0.0, 0.0);
  const double intensity =
      (broadside.E_theta * broadside.E_theta + broadside.E_phi * broadside.E_phi) / (2.0 * constants::eta0);
  return intensity / (p_radiated(design, f_hz, kReferenceField) / (4.0 * pi));
}

double efficiency(const CircPatchDesign& design, double f_hz, SurfaceWaveForm form) {
  const ResistanceBreakdown b = r_total_circ(design, f_hz, form);
  return b.R_r / b.R_total;
}

double gain(const CircPatchDesign& design, double f_hz, SurfaceWaveForm form) {
  return efficiency(design, f_hz, form) * directivity(design, f_hz);
}

CircLossReport analyze_circ(const CircPatchDesign& design, double f_hz, const CircModel& model) {
  design.validate();
  const double e0 = kReferenceField;
  CircLossReport out;
  out.P_r = p_radiated(design, f_hz, e0);
  out.P_s = surface_wave_factor(design.substrate, f_hz, model.surface_wave).T1 * out.P_r;
  out.P_c = p_conductor(design, f_hz, e0);
  out.P_d = p_dielectric(design, f_hz, e0);
  out.W_T = stored_energy(design, e0);
  out.breakdown = r_total_circ(design, f_hz, model.surface_wave);
  out.e_r = out.breakdown.R_r / out.breakdown.R_total;
  out.D = directivity(design, f_hz);
  out.G = out.e_r * out.D;
  out.Q_T = angular(f_hz) * out.W_T / (out.P_r + out.P_s + out.P_c + out.P_d);
  out.R_in = out.breakdown.R_total * feed_taper(design, design.rho0);
  out.printed = printed_loss_check(design, f_hz);
  return out;
}

std::vector<PatternPoint> pattern_cut(const CircPatchDesign& design, double f_hz, Plane plane,
                                      double step) {
  if (!(step > 0.0) || step > pi / 2.0) {
    fail(ErrorKind::Domain, "pattern step must be in (0, pi/2] rad");
  }
  const int half_count = static_cast<int>(std::floor((pi / 2.0) / step + 1e-9));
  const double e0 = kReferenceField;

  auto level = [&](double theta) {
    const double t = std::min(std::abs(theta), pi / 2.0);
    const bool far_side = theta < 0.0;
    if (plane == Plane::E) return far_fields(design, f_hz, e0, t, far_side ? pi : 0.0).E_theta;
    return far_fields(design, f_hz, e0, t, far_side ? 1.5 * pi : 0.5 * pi).E_phi;
  };
  const double reference = level(0.0);

  std::vector<PatternPoint> cut;
  cut.reserve(2 * half_count + 1);
  for (int i = -half_count; i <= half_count; ++i) {
    const double theta = i * step;
    const double ratio = level(theta) / reference;
    cut.push_back({theta, ratio > 0.0 ? 20.0 * std::log10(ratio)
                                      : -std::numeric_limits<double>::infinity()});
  }
  return cut;
}

std::vector<std::string> model_warnings(const CircPatchDesign& design, double f_hz) {
  std::vector<std::string> notes;
  const RegimeReport regime = thickness_regime(design.substrate, f_hz);
  if (regime.regime == Regime::Thin) {
    notes.push_back("substrate is thin (h/lambda0 = " + std::to_string(regime.ratio) + " <= " +
                    std::to_string(regime.threshold) + "); the thick-substrate model may not apply");
  }
  const double k0a = wavenumber(f_hz) * design.a_eff;
  if (k0a > kSeriesWarnLimit) {
    notes.push_back("k0 a_eff = " + std::to_string(k0a) +
                    " > 1.8; the quartic radiated-power series is degraded");
  }
  return notes;
}

}  // namespace patchant::circ
