#include "patchant/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "patchant/error.hpp"

namespace patchant::response {
namespace {

// Frequency where the RL curve crosses the -10 dB threshold between two samples.
double crossing(const Sample& inside, const Sample& outside) {
  const double t = (kBandwidthThresholdDb - inside.rl_db) / (outside.rl_db - inside.rl_db);
  return inside.f_hz + t * (outside.f_hz - inside.f_hz);
}

}  // namespace

void SweepSpec::validate() const {
  if (!(f_start > 0.0)) fail(ErrorKind::Domain, "sweep invariant f_start > 0 violated");
  if (!(f_start < f_stop) || !std::isfinite(f_stop)) {
    fail(ErrorKind::Domain, "sweep invariant f_start < f_stop violated");
  }
  if (points < 2) fail(ErrorKind::Domain, "sweep invariant points >= 2 violated");
  if (!(reference_impedance > 0.0)) {
    fail(ErrorKind::Domain, "sweep invariant reference_impedance > 0 violated");
  }
}

Resonator resonator(const rect::RectPatchDesign& design, const rect::RectModel& model) {
  const double f_r = rect::resonant_frequency_rect(design);
  const double eps_ew = rect::eps_effective(design.substrate, design.L);
  return {rect::input_resistance_rect(design, f_r, model), f_r,
          rect::q_radiation(eps_ew, design.substrate.h, f_r)};
}

Resonator resonator(const circ::CircPatchDesign& design, const circ::CircModel& model) {
  design.validate();
  const double f_r = circ::tm11_root() * constants::c /
                     (2.0 * std::numbers::pi * design.a_eff * std::sqrt(design.substrate.eps_r));
  return {circ::input_resistance_circ(design, f_r, model), f_r,
          circ::total_q(design, f_r, model.surface_wave)};
}

std::complex<double> input_impedance(const Resonator& model, double f_hz) {
  if (!(f_hz > 0.0)) fail(ErrorKind::Domain, "frequency must be positive");
  const double detune = f_hz / model.f_res - model.f_res / f_hz;
  return model.r_res / std::complex<double>(1.0, model.q * detune);
}

std::complex<double> reflection(std::complex<double> z, double z_ref) {
  if (!(z_ref > 0.0)) fail(ErrorKind::Domain, "reference impedance must be positive");
  return (z - z_ref) / (z + z_ref);
}

double return_loss_db(std::complex<double> gamma) {
  const double mag = std::abs(gamma);
  if (mag == 0.0) return kReturnLossFloorDb;
  return std::max(20.0 * std::log10(mag), kReturnLossFloorDb);
}

double vswr(std::complex<double> gamma) {
  const double mag = std::abs(gamma);
  if (mag >= 1.0) return std::numeric_limits<double>::infinity();
  return (1.0 + mag) / (1.0 - mag);
}

FrequencyResponse sweep(const Resonator& model, const SweepSpec& spec) {
  spec.validate();
  FrequencyResponse out;
  out.reference_impedance = spec.reference_impedance;
  out.samples.reserve(static_cast<std::size_t>(spec.points));
  const double step = (spec.f_stop - spec.f_start) / (spec.points - 1);
  for (int i = 0; i < spec.points; ++i) {
    const double f = i == spec.points - 1 ? spec.f_stop : spec.f_start + i * step;
    const std::complex<double> z = input_impedance(model, f);
    const std::complex<double> gamma = reflection(z, spec.reference_impedance);
    out.samples.push_back({f, z.real(), z.imag(), std::abs(gamma), return_loss_db(gamma), vswr(gamma)});
  }
  return out;
}

ResonanceReport extract_resonance(const FrequencyResponse& response) {
  const auto& s = response.samples;
  if (s.size() < 2) fail(ErrorKind::Domain, "resonance extraction needs at least two samples");

  const auto best = std::min_element(s.begin(), s.end(),
                                     [](const Sample& x, const Sample& y) { return x.rl_db < y.rl_db; });
  const std::size_t idx = static_cast<std::size_t>(best - s.begin());

  ResonanceReport report;
  report.rl_min_db = best->rl_db;
  report.vswr_at_res = best->vswr;
  report.f_res = best->f_hz;
  report.at_sweep_edge = idx == 0 || idx + 1 == s.size();
  if (!report.at_sweep_edge) {
    const double y0 = s[idx - 1].rl_db;
    const double y1 = s[idx].rl_db;
    const double y2 = s[idx + 1].rl_db;
    const double curvature = y0 - 2.0 * y1 + y2;
    if (curvature > 0.0) {
      const double half_step = 0.5 * (s[idx + 1].f_hz - s[idx - 1].f_hz);
      report.f_res += 0.5 * (y0 - y2) / curvature * half_step;
    }
  }

  if (best->rl_db > kBandwidthThresholdDb) return report;
  report.bandwidth_found = true;

  std::size_t left = idx;
  while (left > 0 && s[left - 1].rl_db <= kBandwidthThresholdDb) --left;
  std::size_t right = idx;
  while (right + 1 < s.size() && s[right + 1].rl_db <= kBandwidthThresholdDb) ++right;

  double f_lo = s[left].f_hz;
  double f_hi = s[right].f_hz;
  if (left == 0) {
    report.band_truncated = true;
  } else {
    f_lo = crossing(s[left], s[left - 1]);
  }
  if (right + 1 == s.size()) {
    report.band_truncated = true;
  } else {
    f_hi = crossing(s[right], s[right + 1]);
  }
  report.bandwidth_hz = f_hi - f_lo;
  if (report.bandwidth_hz > 0.0) report.q_loaded = report.f_res / report.bandwidth_hz;
  return report;
}

}  // namespace patchant::response
