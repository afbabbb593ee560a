#pragma once

#include <complex>
#include <vector>

#include "patchant/circpatch.hpp"
#include "patchant/rectpatch.hpp"

namespace patchant::response {

inline constexpr double kReturnLossFloorDb = -100.0;
inline constexpr double kBandwidthThresholdDb = -10.0;
inline constexpr double kDefaultReferenceImpedance = 50.0;

struct SweepSpec {
  double f_start = 0.0;
  double f_stop = 0.0;
  int points = 0;
  double reference_impedance = kDefaultReferenceImpedance;

  void validate() const;
};

struct Sample {
  double f_hz = 0.0;
  double r_in_ohm = 0.0;
  double x_in_ohm = 0.0;
  double gamma_mag = 0.0;
  double rl_db = 0.0;
  double vswr = 1.0;
};

struct FrequencyResponse {
  std::vector<Sample> samples;
  double reference_impedance = kDefaultReferenceImpedance;
};

struct ResonanceReport {
  double f_res = 0.0;
  double rl_min_db = 0.0;
  double vswr_at_res = 1.0;
  double bandwidth_hz = 0.0;  // contiguous RL <= -10 dB span around f_res
  double q_loaded = 0.0;      // f_res / bandwidth, 0 when no band
  bool at_sweep_edge = false;     // minimum sits on the first or last sample
  bool bandwidth_found = false;   // some sample reaches -10 dB
  bool band_truncated = false;    // the -10 dB span runs into the sweep limits
};

/// Single parallel-RLC resonance: Z(f) = R / (1 + j Q (f/f_r - f_r/f)).
struct Resonator {
  double r_res = 0.0;  // input resistance at the feed, at f_r
  double f_res = 0.0;
  double q = 0.0;
};

/// Rectangular patch: f_r from the edge-extended length, R at the feed
/// offset, Q = Q_r.
Resonator resonator(const rect::RectPatchDesign& design, const rect::RectModel& model);

/// Circular patch: TM11 f_r of a_eff, R_T times the feed taper, Q = Q_T.
Resonator resonator(const circ::CircPatchDesign& design, const circ::CircModel& model);

std::complex<double> input_impedance(const Resonator& model, double f_hz);

std::complex<double> reflection(std::complex<double> z, double z_ref);

/// 20 log10 |gamma|, floored at kReturnLossFloorDb.
double return_loss_db(std::complex<double> gamma);

/// (1 + |gamma|) / (1 - |gamma|); +inf when |gamma| >= 1.
double vswr(std::complex<double> gamma);

FrequencyResponse sweep(const Resonator& model, const SweepSpec& spec);

ResonanceReport extract_resonance(const FrequencyResponse& response);

}  // namespace patchant::response
