#include <doctest.h>

#include <cmath>
#include <numbers>

#include "golden.hpp"
#include "oracles.hpp"
#include "patchant/error.hpp"
#include "patchant/rectpatch.hpp"

using namespace patchant;
using namespace patchant::rect;
namespace g = patchant::golden::rect39;

namespace {

constexpr double kF = 39e9;
constexpr double pi = std::numbers::pi;

SubstrateSpec fr4ish() {
  SubstrateSpec s;
  s.eps_r = 4.7;
  s.h = 0.8e-3;
  return s;
}

RectPatchDesign reference_patch() {
  RectPatchDesign d;
  d.L = 1.06e-3;
  d.W = 0.98e-3;
  d.feed_offset_a = 0.05e-3;
  d.substrate = fr4ish();
  d.f_design = kF;
  return d;
}

double rel(double got, double want) { return std::abs(got / want - 1.0); }

}  // namespace

TEST_CASE("synthesis reproduces the 39 GHz reference geometry within 15%") {
  const RectPatchDesign d = synth_rect(kF, fr4ish());
  CHECK(rel(d.L, 1.06e-3) < 0.15);
  CHECK(rel(d.W, 0.98e-3) < 0.15);
  CHECK(d.feed_offset_a == 0.0);
  CHECK(d.f_design == kF);

  // Arithmetic oracle: lambda_d = lambda0 / sqrt(eps_r), L = (pi / eps_r) sqrt(h lambda_d).
  const double lambda0 = oracle::c / kF;
  CHECK(d.L == doctest::Approx(pi / 4.7 * std::sqrt(0.8e-3 * lambda0 / std::sqrt(4.7))).epsilon(1e-13));
}

TEST_CASE("the width formula as printed lands far from the reference width") {
  const RectPatchDesign printed = synth_rect(kF, fr4ish(), WidthFormula::AsPrinted);
  CHECK(printed.W > 4.0 * 0.98e-3);
  CHECK(printed.L == synth_rect(kF, fr4ish()).L);
}

TEST_CASE("synthesised length scales with sqrt(h)") {
  SubstrateSpec thin = fr4ish();
  thin.h = 0.4e-3;
  SubstrateSpec thick = fr4ish();
  thick.h = 4.0 * thin.h;
  CHECK(synth_rect(kF, thick).L == doctest::Approx(2.0 * synth_rect(kF, thin).L).epsilon(1e-12));
}

TEST_CASE("synthesis fails when lambda0 does not exceed e*h") {
  SubstrateSpec slab = fr4ish();
  slab.h = 10.0;
  try {
    synth_rect(kF, slab);
    FAIL("expected synthesis error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Synthesis);
  }
}

TEST_CASE("effective permittivity") {
  SubstrateSpec air = fr4ish();
  air.eps_r = 1.0;
  CHECK(eps_effective(air, 1e-3) == 1.0);
  SubstrateSpec foil = fr4ish();
  foil.h = 1e-12;
  CHECK(eps_effective(foil, 1e-3) == doctest::Approx(4.7).epsilon(1e-12));
  const double oracle = 0.5 * (5.7 + 3.7 / std::sqrt(1.0 + std::pow(10.0 * 0.8 / 1.06, 2)));
  CHECK(eps_effective(fr4ish(), 1.06e-3) == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(eps_effective(fr4ish(), 1.06e-3) == doctest::Approx(g::eps_ew).epsilon(1e-13));
}

TEST_CASE("property: effective permittivity rises with L and with eps_r") {
  for (double eps = 1.5; eps <= 12.0; eps += 0.5) {
    SubstrateSpec s = fr4ish();
    s.eps_r = eps;
    double last = 0.0;
    for (double L = 0.1e-3; L <= 10e-3; L += 0.1e-3) {
      const double e = eps_effective(s, L);
      CHECK(e > last);
      CHECK(e > 1.0);
      CHECK(e <= eps);
      last = e;
    }
  }
  for (double L : {0.5e-3, 1e-3, 3e-3}) {
    double last = 0.0;
    for (double eps = 1.1; eps <= 12.0; eps += 0.1) {
      SubstrateSpec s = fr4ish();
      s.eps_r = eps;
      CHECK(eps_effective(s, L) > last);
      last = eps_effective(s, L);
    }
  }
}

TEST_CASE("radiation Q") {
  const double lambda0 = oracle::c / kF;
  CHECK(q_radiation(1.0, lambda0 / 4.0, kF) == doctest::Approx(1.0));
  CHECK(q_radiation(2.86, 0.8e-3, kF) == doctest::Approx(4.06246033965375).epsilon(1e-12));
  CHECK(q_radiation(2.86, 1.6e-3, kF) == doctest::Approx(0.5 * q_radiation(2.86, 0.8e-3, kF)));
}

TEST_CASE("conductor and dielectric resistances") {
  const RectPatchDesign d = reference_patch();
  CHECK(r_conductor_rect(d, kF) == doctest::Approx(g::R_c).epsilon(1e-12));
  const double q = q_radiation(g::eps_ew, 0.8e-3, kF);
  CHECK(r_conductor_rect(d, kF) == doctest::Approx(0.00027 * (1.06 / 0.98) * q * q * std::sqrt(39.0)));
  // Q_r ~ 1/f, so R_c ~ f^-2 sqrt(f): doubling f quarters Q_r^2.
  CHECK(r_conductor_rect(d, 2 * kF) / r_conductor_rect(d, kF) == doctest::Approx(std::sqrt(2.0) / 4.0));

  CHECK(r_dielectric_rect(d, kF) == doctest::Approx(g::R_d).epsilon(1e-12));
  const double skin = std::sqrt(pi * kF * oracle::mu0 * 5.8e7);
  CHECK(r_dielectric_rect(d, kF) / r_conductor_rect(d, kF) == doctest::Approx(0.001 * 0.8e-3 * skin));
  CHECK(r_dielectric_rect(d, kF) / r_conductor_rect(d, kF) == doctest::Approx(2.4).epsilon(0.01));
  RectPatchDesign lossless = d;
  lossless.substrate.tan_delta = 0.0;
  CHECK(r_dielectric_rect(lossless, kF) == 0.0);
}

TEST_CASE("strip impedance") {
  const double air = strip_impedance(1.0, 1e-3, 1e-3);
  CHECK(air == doctest::Approx(oracle::eta0 / (pi * 2.0) * std::log(4.0 + std::sqrt(18.0))));
  CHECK(strip_impedance(4.7, 0.8e-3, 0.98e-3) == doctest::Approx(g::Z0w).epsilon(1e-12));
  CHECK(strip_impedance(1.0, 0.8e-3, 0.98e-3) == doctest::Approx(g::Z0a).epsilon(1e-12));
  for (double eps : {1.0, 2.32, 4.7, 10.0}) {
    double last = INFINITY;
    for (double wh = 0.1; wh <= 20.0; wh += 0.05) {
      const double z = strip_impedance(eps, 1e-3, wh * 1e-3);
      CHECK(z < last);
      CHECK(z > 0.0);
      last = z;
    }
  }
}

TEST_CASE("property: strip impedance branches agree within 5% at W/h = 3.3") {
  for (double eps = 1.0; eps <= 12.0; eps += 0.25) {
    const double at = strip_impedance(eps, 1e-3, 3.3e-3);
    const double above = strip_impedance(eps, 1e-3, 3.3e-3 * (1.0 + 1e-12));
    CAPTURE(eps);
    CHECK(std::abs(above / at - 1.0) < 0.05);
  }
}

TEST_CASE("equivalent width and effective length") {
  const RectPatchDesign d = reference_patch();
  CHECK(equivalent_width(d) == doctest::Approx(g::W_eq).epsilon(1e-12));
  CHECK(equivalent_width(d) * strip_impedance(4.7, 0.8e-3, 0.98e-3) * std::sqrt(g::eps_ew) ==
        doctest::Approx(oracle::eta0 * 0.8e-3));
  CHECK(effective_length(d) == doctest::Approx(g::L_ef).epsilon(1e-12));
  CHECK(effective_length(d) > d.L);
}

TEST_CASE("property: W_eq >= W over W/h in [0.5, 10], eps_r in [2, 10]") {
  for (double eps = 2.0; eps <= 10.0; eps += 0.5) {
    for (double wh = 0.5; wh <= 10.0; wh += 0.25) {
      for (double lw : {0.5, 1.0, 2.0}) {
        RectPatchDesign d = reference_patch();
        d.substrate.eps_r = eps;
        d.substrate.h = 1e-3;
        d.W = wh * 1e-3;
        d.L = lw * d.W;
        d.feed_offset_a = 0.0;
        CAPTURE(eps);
        CAPTURE(wh);
        CHECK(equivalent_width(d) >= d.W);
        CHECK(effective_length(d) >= d.L);
      }
    }
  }
}

TEST_CASE("radiation resistance variants") {
  const RectPatchDesign d = reference_patch();
  const double literal = r_radiation_rect(d, kF, RadiationModel::Literal);
  CHECK(literal == doctest::Approx(g::R_r_literal).epsilon(1e-12));
  CHECK(literal * 2.0 * pi * effective_length(d) ==
        doctest::Approx(strip_impedance(4.7, 0.8e-3, 0.98e-3) * oracle::c / kF));
  CHECK(r_radiation_rect(d, kF, RadiationModel::Calibrated) ==
        doctest::Approx(kCalibratedRadiationScale * literal));

  CHECK(parse_radiation_model("literal") == RadiationModel::Literal);
  CHECK(parse_radiation_model("calibrated") == RadiationModel::Calibrated);
  try {
    parse_radiation_model("eq-literal");
    FAIL("expected configuration error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Configuration);
  }
}

TEST_CASE("calibration constant re-derived by bisection") {
  const RectPatchDesign d = reference_patch();
  // R_in is linear in the scale: R_in(s) = s * (R_r_lit * (taper + T1)) + R_c + R_d.
  const RectAnalysis lit = analyze_rect(d, kF, {RadiationModel::Literal});
  auto residual = [&](double s) {
    return s * lit.breakdown.R_r * (feed_taper(d, kF, d.feed_offset_a) + lit.derived.T1) +
           lit.breakdown.R_c + lit.breakdown.R_d - 50.0;
  };
  const double scale = oracle::bisect(residual, 0.01, 10.0);
  CHECK(scale == doctest::Approx(kCalibratedRadiationScale).epsilon(1e-12));
  CHECK(scale == doctest::Approx(g::calibration_scale).epsilon(1e-12));
}

TEST_CASE("surface-wave factor") {
  SubstrateSpec air = fr4ish();
  air.eps_r = 1.0;
  const SurfaceWave none = surface_wave_factor(air, kF);
  CHECK(none.K1 == 0.0);
  CHECK(none.T1 == 0.0);

  SubstrateSpec duroid = fr4ish();
  duroid.eps_r = 2.32;
  const SurfaceWave sw = surface_wave_factor(duroid, kF);
  CHECK(sw.K1 * duroid.h == doctest::Approx(golden::sub232::K1h).epsilon(1e-12));
  CHECK(sw.K1 == doctest::Approx(898.0).epsilon(0.002));
  CHECK(sw.T1 == doctest::Approx(golden::sub232::T1).epsilon(1e-12));

  const SurfaceWave corrected = surface_wave_factor(duroid, kF, SurfaceWaveForm::Corrected);
  CHECK(corrected.K1 == sw.K1);
  CHECK(corrected.T1 < sw.T1);

  const SurfaceWave rect = surface_wave_factor(fr4ish(), kF);
  CHECK(rect.K1 == doctest::Approx(g::K1).epsilon(1e-12));
  CHECK(rect.T1 == doctest::Approx(g::T1).epsilon(1e-12));
}

TEST_CASE("property: T1 positive and increasing in h on (0, lambda0/4) for eps_r 2.32") {
  SubstrateSpec s = fr4ish();
  s.eps_r = 2.32;
  const double quarter = oracle::c / kF / 4.0;
  double last = 0.0;
  for (int i = 1; i <= 400; ++i) {
    s.h = quarter * i / 400.0;
    const double t1 = surface_wave_factor(s, kF).T1;
    CHECK(t1 > last);
    last = t1;
  }
}

TEST_CASE("edge extension") {
  const RectPatchDesign d = reference_patch();
  CHECK(edge_extension(d) == doctest::Approx(g::delta_L).epsilon(1e-12));
  CHECK(edge_extension(d) > 0.0);
  RectPatchDesign scaled = d;
  scaled.substrate.h *= 3.0;
  scaled.L *= 3.0;
  scaled.W *= 3.0;
  CHECK(edge_extension(scaled) == doctest::Approx(3.0 * edge_extension(d)).epsilon(1e-13));
}

TEST_CASE("feed-position expression and its singularity") {
  const RectPatchDesign d = reference_patch();
  CHECK(feed_position_resistance(d, kF, d.feed_offset_a) ==
        doctest::Approx(g::feed_position_resistance).epsilon(1e-12));
  CHECK(feed_taper(d, kF, d.feed_offset_a) == doctest::Approx(g::taper).epsilon(1e-12));
  CHECK(feed_taper(d, kF, 0.0) == 1.0);

  const double pole = pi / (2.0 * pi * kF / oracle::c) - edge_extension(d);
  try {
    feed_position_resistance(d, kF, pole);
    FAIL("expected singularity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singularity);
    CHECK(std::string(e.what()).find("feed offset") != std::string::npos);
  }
  CHECK_THROWS_AS(feed_taper(d, kF, pole), Error);
}

TEST_CASE("input resistance: calibrated reference patch is matched") {
  const RectPatchDesign d = reference_patch();
  const double r = input_resistance_rect(d, kF, {RadiationModel::Calibrated});
  CHECK(std::abs(r - 50.0) < 1.0);
  CHECK(r == doctest::Approx(50.0).epsilon(1e-9));
}

TEST_CASE("input resistance falls from the edge toward the centre") {
  for (auto model : {RadiationModel::Calibrated, RadiationModel::Literal}) {
    RectPatchDesign d = reference_patch();
    double last = INFINITY;
    for (int i = 0; i <= 100; ++i) {
      d.feed_offset_a = 0.5 * d.L * i / 100.0;
      const double r = input_resistance_rect(d, kF, {model});
      CHECK(r < last);
      last = r;
    }
    d.feed_offset_a = 0.0;
    CHECK(input_resistance_rect(d, kF, {model}) ==
          doctest::Approx(analyze_rect(d, kF, {model}).breakdown.R_total));
  }
}

TEST_CASE("analysis breakdown identities") {
  for (auto model : {RadiationModel::Calibrated, RadiationModel::Literal}) {
    const RectAnalysis an = analyze_rect(reference_patch(), kF, {model});
    const auto& b = an.breakdown;
    CHECK(b.R_total == b.R_r + b.R_s + b.R_c + b.R_d);
    CHECK(b.R_s == an.derived.T1 * b.R_r);
    CHECK(b.R_r > 0.0);
    CHECK(b.R_s > 0.0);
    CHECK(b.R_c > 0.0);
    CHECK(b.R_d > 0.0);
    const auto& dv = an.derived;
    CHECK(dv.eps_eff > 1.0);
    CHECK(dv.eps_eff <= 4.7);
    CHECK(dv.Q_r == doctest::Approx(g::Q_r).epsilon(1e-12));
    CHECK(dv.Z0a == doctest::Approx(g::Z0a).epsilon(1e-12));
    CHECK(dv.W_eq >= reference_patch().W);
    CHECK(dv.L_ef >= reference_patch().L);
    CHECK(dv.lambda_d == doctest::Approx(oracle::c / kF / std::sqrt(4.7)));
  }
}

TEST_CASE("resonant frequency of the reference patch") {
  CHECK(resonant_frequency_rect(reference_patch()) == doctest::Approx(g::f_res).epsilon(1e-12));
  CHECK(std::abs(resonant_frequency_rect(reference_patch()) - 38.9e9) < 0.8e9);
}

TEST_CASE("feed offset for a 50 ohm match") {
  RectPatchDesign d = reference_patch();
  const RectModel model{RadiationModel::Calibrated};
  d.feed_offset_a = feed_offset_for_match(d, kF, 50.0, model);
  CHECK(d.feed_offset_a == doctest::Approx(0.05e-3).epsilon(1e-5));
  CHECK(input_resistance_rect(d, kF, model) == doctest::Approx(50.0).epsilon(1e-6));
  try {
    feed_offset_for_match(d, kF, 5000.0, model);
    FAIL("expected no-solution error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSolution);
  }
}

TEST_CASE("property: synthesis then analysis is finite across thick substrates") {
  for (double eps = 2.0; eps <= 10.0; eps += 0.5) {
    for (double ratio = 0.05; ratio <= 0.15 + 1e-9; ratio += 0.01) {
      SubstrateSpec s = fr4ish();
      s.eps_r = eps;
      s.h = ratio * oracle::c / kF;
      const RectPatchDesign d = synth_rect(kF, s);
      for (auto model : {RadiationModel::Calibrated, RadiationModel::Literal}) {
        const RectAnalysis an = analyze_rect(d, kF, {model});
        CAPTURE(eps);
        CAPTURE(ratio);
        CHECK(std::isfinite(an.R_in));
        CHECK(an.R_in > 0.0);
      }
    }
  }
}

TEST_CASE("design validation") {
  RectPatchDesign d = reference_patch();
  d.feed_offset_a = 0.6 * d.L;
  CHECK_THROWS_AS(d.validate(), Error);
  d = reference_patch();
  d.W = 0.0;
  CHECK_THROWS_AS(d.validate(), Error);
}

TEST_CASE("warnings flag a thin substrate") {
  RectPatchDesign d = reference_patch();
  CHECK(model_warnings(d, kF).empty());
  d.substrate.h = 0.05e-3;
  CHECK_FALSE(model_warnings(d, kF).empty());
}
