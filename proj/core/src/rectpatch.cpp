#include "patchant/rectpatch.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "patchant/error.hpp"

namespace patchant::rect {
namespace {

using std::numbers::pi;

constexpr double kStripBranchPoint = 3.3;

double eps_ew_of(const RectPatchDesign& design) {
  return eps_effective(design.substrate, design.L);
}

// (eps + 0.9) / (eps - 0.299), shared by the length and edge corrections.
double fringe_ratio(double eps_ew) {
  return (eps_ew + 0.9) / (eps_ew - 0.299);
}

// Trigonometric part of the feed-position expression,
// {1 - sin 2x / sin x} / {1 - cos 2x}.
double feed_trig_factor(double x, double feed_offset) {
  const double denom = 1.0 - std::cos(2.0 * x);
  if (std::abs(denom) < 1e-12 || std::sin(x) == 0.0) {
    fail(ErrorKind::Singularity, "feed-position expression is singular at feed offset a = " +
                                     std::to_string(feed_offset) + " m (1 - cos 2k0(a + dL) = 0)");
  }
  return (1.0 - std::sin(2.0 * x) / std::sin(x)) / denom;
}

}  // namespace

std::string_view to_string(RadiationModel model) noexcept {
  return model == RadiationModel::Literal ? "literal" : "calibrated";
}

std::string_view to_string(WidthFormula formula) noexcept {
  return formula == WidthFormula::InverseSqrtEps ? "width-inv-sqrt" : "width-printed";
}

RadiationModel parse_radiation_model(std::string_view name) {
  if (name == "literal") return RadiationModel::Literal;
  if (name == "calibrated") return RadiationModel::Calibrated;
  fail(ErrorKind::Configuration, "unknown rectangular model variant '" + std::string(name) +
                                     "' (expected literal or calibrated)");
}

WidthFormula parse_width_formula(std::string_view name) {
  if (name == "width-inv-sqrt") return WidthFormula::InverseSqrtEps;
  if (name == "width-printed") return WidthFormula::AsPrinted;
  fail(ErrorKind::Configuration, "unknown width formula '" + std::string(name) +
                                     "' (expected width-inv-sqrt or width-printed)");
}

void RectPatchDesign::validate() const {
  substrate.validate();
  if (!(L > 0.0) || !std::isfinite(L)) fail(ErrorKind::Domain, "rect invariant L > 0 violated");
  if (!(W > 0.0) || !std::isfinite(W)) fail(ErrorKind::Domain, "rect invariant W > 0 violated");
  if (!(feed_offset_a >= 0.0) || feed_offset_a > 0.5 * L) {
    fail(ErrorKind::Domain, "rect invariant 0 <= feed_offset_a <= L/2 violated (a = " +
                                std::to_string(feed_offset_a) + " m)");
  }
  if (!(f_design > 0.0)) fail(ErrorKind::Domain, "rect invariant f_design > 0 violated");
}

RectPatchDesign synth_rect(double f0_hz, const SubstrateSpec& sub, WidthFormula width) {
  sub.validate();
  const double lambda0 = free_space_wavelength(f0_hz);
  const double lambda_d = lambda0 / std::sqrt(sub.eps_r);

  RectPatchDesign design;
  design.substrate = sub;
  design.f_design = f0_hz;
  design.L = pi / sub.eps_r * std::sqrt(sub.h * lambda_d);

  const double log_term = std::log(lambda0 / sub.h) - 1.0;
  if (!(log_term > 0.0)) {
    fail(ErrorKind::Synthesis, "width synthesis needs ln(lambda0/h) > 1; lambda0 = " +
                                   std::to_string(lambda0) + " m, h = " + std::to_string(sub.h) +
                                   " m");
  }
  const double eps_eff = eps_effective(sub, design.L);
  const double eps_factor = width == WidthFormula::InverseSqrtEps ? 1.0 / std::sqrt(eps_eff) : eps_eff;
  design.W = lambda0 / (2.0 * pi) * log_term * eps_factor;
  return design;
}

double eps_effective(const SubstrateSpec& sub, double length) {
  if (!(length > 0.0)) fail(ErrorKind::Domain, "effective permittivity needs L > 0");
  const double r = 10.0 * sub.h / length;
  return 0.5 * ((sub.eps_r + 1.0) + (sub.eps_r - 1.0) / std::sqrt(1.0 + r * r));
}

double q_radiation(double eps, double h, double f_hz) {
  if (!(h > 0.0)) fail(ErrorKind::Domain, "Q_r needs h > 0");
  return free_space_wavelength(f_hz) / (4.0 * h) * std::sqrt(eps);
}

double r_conductor_rect(const RectPatchDesign& design, double f_hz) {
  design.validate();
  const double q = q_radiation(eps_ew_of(design), design.substrate.h, f_hz);
  return 0.00027 * (design.L / design.W) * q * q * std::sqrt(f_hz / 1e9);
}

double r_dielectric_rect(const RectPatchDesign& design, double f_hz) {
  const auto& sub = design.substrate;
  if (sub.tan_delta == 0.0) return 0.0;
  const double skin = std::sqrt(pi * f_hz * constants::mu0 * sub.sigma);
  return r_conductor_rect(design, f_hz) * sub.tan_delta * sub.h * skin;
}

double strip_impedance(double eps_r, double h, double width) {
  if (!(width > 0.0) || !(h > 0.0)) fail(ErrorKind::Domain, "strip impedance needs W > 0 and h > 0");
  if (!(eps_r >= 1.0)) fail(ErrorKind::Domain, "strip impedance needs eps_r >= 1");
  const double w_over_h = width / h;
  const double fill = (eps_r - 1.0) / (eps_r + 1.0);
  if (w_over_h <= kStripBranchPoint) {
    const double h_over_w = h / width;
    const double log_arg = 4.0 * h_over_w + std::sqrt(2.0 + 16.0 * h_over_w * h_over_w);
    return constants::eta0 / (pi * std::sqrt(2.0 * (eps_r + 1.0))) *
           (std::log(log_arg) - fill * (0.2258 + 0.1208 / eps_r));
  }
  const double half_w = w_over_h / 2.0;
  const double bracket = half_w + 0.4413 + 0.0823 * (eps_r - 1.0) / (eps_r * eps_r) +
                         ((eps_r + 1.0) / eps_r) * (0.231 + 0.1592 * std::log(half_w + 0.94));
  return constants::eta0 / (2.0 * std::sqrt(eps_r)) / bracket;
}

double equivalent_width(const RectPatchDesign& design) {
  design.validate();
  const double z0w = strip_impedance(design.substrate.eps_r, design.substrate.h, design.W);
  return constants::eta0 * design.substrate.h / (z0w * std::sqrt(eps_ew_of(design)));
}

double effective_length(const RectPatchDesign& design) {
  const double w_eq = equivalent_width(design);
  return design.L + 0.5 * (w_eq - design.W) * fringe_ratio(eps_ew_of(design));
}

double r_radiation_rect(const RectPatchDesign& design, double f_hz, RadiationModel model) {
  const double z0w = strip_impedance(design.substrate.eps_r, design.substrate.h, design.W);
  const double literal = z0w * free_space_wavelength(f_hz) / (2.0 * pi * effective_length(design));
  return model == RadiationModel::Calibrated ? kCalibratedRadiationScale * literal : literal;
}

double edge_extension(const RectPatchDesign& design) {
  design.validate();
  const double h = design.substrate.h;
  const double l_over_h = design.L / h;
  return 0.412 * h * fringe_ratio(eps_ew_of(design)) * (l_over_h + 0.264) / (l_over_h + 0.813);
}

double feed_position_resistance(const RectPatchDesign& design, double f_hz, double feed_offset) {
  const double eps_ew = eps_ew_of(design);
  const double lambda0 = free_space_wavelength(f_hz);
  const double k0 = wavenumber(f_hz);
  const double x = k0 * (feed_offset + edge_extension(design));
  const double denom = lambda0 * (eps_ew - 1.0 / eps_ew);
  if (denom == 0.0) {
    fail(ErrorKind::Singularity, "feed-position prefactor is singular for eps_ew = 1");
  }
  return constants::eta0 * effective_length(design) / denom * feed_trig_factor(x, feed_offset);
}

double feed_taper(const RectPatchDesign& design, double f_hz, double feed_offset) {
  const double k0 = wavenumber(f_hz);
  const double dl = edge_extension(design);
  const double edge = feed_trig_factor(k0 * dl, 0.0);
  if (std::abs(edge) < 1e-12) {
    fail(ErrorKind::Singularity, "feed taper is undefined: the edge value of the feed-position "
                                 "expression vanishes (k0 dL = pi/3)");
  }
  return std::abs(feed_trig_factor(k0 * (feed_offset + dl), feed_offset)) / std::abs(edge);
}

double input_resistance_rect(const RectPatchDesign& design, double f_hz, const RectModel& model) {
  return analyze_rect(design, f_hz, model).R_in;
}

RectAnalysis analyze_rect(const RectPatchDesign& design, double f_hz, const RectModel& model) {
  design.validate();
  const auto& sub = design.substrate;
  const double lambda0 = free_space_wavelength(f_hz);

  RectAnalysis out;
  auto& d = out.derived;
  d.eps_eff = eps_effective(sub, design.L);
  d.eps_ew = d.eps_eff;
  d.Q_r = q_radiation(d.eps_ew, sub.h, f_hz);
  d.Z0w = strip_impedance(sub.eps_r, sub.h, design.W);
  d.Z0a = strip_impedance(1.0, sub.h, design.W);
  d.W_eq = equivalent_width(design);
  d.L_ef = effective_length(design);
  d.delta_L = edge_extension(design);
  const SurfaceWave sw = surface_wave_factor(sub, f_hz, model.surface_wave);
  d.K1 = sw.K1;
  d.T1 = sw.T1;
  d.lambda_d = lambda0 / std::sqrt(sub.eps_r);

  const double r_r = r_radiation_rect(design, f_hz, model.radiation);
  out.breakdown = ResistanceBreakdown::from_parts(r_r, sw.T1 * r_r, r_conductor_rect(design, f_hz),
                                                  r_dielectric_rect(design, f_hz));
  const auto& b = out.breakdown;
  out.R_in = b.R_r * feed_taper(design, f_hz, design.feed_offset_a) + b.R_s + b.R_c + b.R_d;
  return out;
}

double resonant_frequency_rect(const RectPatchDesign& design) {
  const double dl = edge_extension(design);
  return constants::c / (2.0 * (design.L + 2.0 * dl) * std::sqrt(design.substrate.eps_r));
}

double feed_offset_for_match(const RectPatchDesign& design, double f_hz, double target_ohm,
                             const RectModel& model, double tol) {
  design.validate();
  if (!(target_ohm > 0.0)) fail(ErrorKind::Domain, "target resistance must be positive");
  auto residual = [&](double a) {
    RectPatchDesign probe = design;
    probe.feed_offset_a = a;
    return input_resistance_rect(probe, f_hz, model) - target_ohm;
  };
  const double half = 0.5 * design.L;
  const double at_edge = residual(0.0);
  const double at_centre = residual(half);
  if (std::signbit(at_edge) == std::signbit(at_centre) && at_edge != 0.0 && at_centre != 0.0) {
    fail(ErrorKind::NoSolution,
         "no feed offset in [0, L/2] gives " + std::to_string(target_ohm) + " ohm; reachable R_in is " +
             std::to_string(at_centre + target_ohm) + " .. " + std::to_string(at_edge + target_ohm) +
             " ohm");
  }
  return specfun::find_root_bracketed(residual, {0.0, half}, tol);
}

std::vector<std::string> model_warnings(const RectPatchDesign& design, double f_hz) {
  std::vector<std::string> notes;
  const RegimeReport regime = thickness_regime(design.substrate, f_hz);
  if (regime.regime == Regime::Thin) {
    notes.push_back("substrate is thin (h/lambda0 = " + std::to_string(regime.ratio) + " <= " +
                    std::to_string(regime.threshold) + "); the thick-substrate model may not apply");
  }
  const double x_centre = wavenumber(f_hz) * (0.5 * design.L + edge_extension(design));
  if (x_centre >= pi / 3.0) {
    notes.push_back("feed taper passes its zero before the patch centre; R_in is not monotone in "
                    "the feed offset");
  }
  return notes;
}

}  // namespace patchant::rect
