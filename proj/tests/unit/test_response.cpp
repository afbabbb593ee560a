#include <doctest.h>

#include <cmath>
#include <complex>

#include "golden.hpp"
#include "patchant/error.hpp"
#include "patchant/response.hpp"

using namespace patchant;
using namespace patchant::response;
namespace g = patchant::golden;

namespace {

constexpr double kF = 39e9;

Resonator toy() { return {73.0, 10e9, 12.0}; }

rect::RectPatchDesign reference_rect() {
  rect::RectPatchDesign d;
  d.L = 1.06e-3;
  d.W = 0.98e-3;
  d.feed_offset_a = 0.05e-3;
  d.substrate.eps_r = 4.7;
  d.substrate.h = 0.8e-3;
  d.f_design = kF;
  return d;
}

circ::CircPatchDesign reference_circ() {
  SubstrateSpec s;
  s.eps_r = 2.32;
  s.h = 0.8e-3;
  return circ::synth_circ(kF, s, circ::CircModel{});
}

std::size_t local_minima(const FrequencyResponse& r) {
  std::size_t n = 0;
  const auto& s = r.samples;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i].rl_db < s[i - 1].rl_db && s[i].rl_db < s[i + 1].rl_db) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("resonator impedance") {
  const Resonator m = toy();
  const auto z = input_impedance(m, m.f_res);
  CHECK(z.real() == doctest::Approx(73.0));
  CHECK(z.imag() == 0.0);

  for (double sign : {-1.0, 1.0}) {
    // nu = f/f_r - f_r/f = +-1/Q at the half-power points.
    const double nu = sign / m.q;
    const double f = m.f_res * (nu + std::sqrt(nu * nu + 4.0)) / 2.0;
    CHECK(std::abs(input_impedance(m, f)) == doctest::Approx(73.0 / std::sqrt(2.0)));
  }
  // Approximate half-power points f_r (1 +- 1/2Q) land close for high Q.
  const Resonator sharp{73.0, 10e9, 200.0};
  CHECK(std::abs(input_impedance(sharp, 10e9 * (1.0 + 1.0 / 400.0))) ==
        doctest::Approx(73.0 / std::sqrt(2.0)).epsilon(2e-3));

  for (double nu = 0.05; nu < 2.0; nu += 0.05) {
    const double f_up = m.f_res * (nu + std::sqrt(nu * nu + 4.0)) / 2.0;
    const double f_dn = m.f_res * (-nu + std::sqrt(nu * nu + 4.0)) / 2.0;
    CHECK(std::abs(input_impedance(m, f_up)) == doctest::Approx(std::abs(input_impedance(m, f_dn))));
  }
  try {
    input_impedance(m, 0.0);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("reflection, return loss and VSWR") {
  const auto matched = reflection({50.0, 0.0}, 50.0);
  CHECK(std::abs(matched) == 0.0);
  CHECK(return_loss_db(matched) == kReturnLossFloorDb);
  CHECK(vswr(matched) == 1.0);

  const auto shorted = reflection({0.0, 0.0}, 50.0);
  CHECK(std::abs(shorted) == doctest::Approx(1.0));
  CHECK(std::isinf(vswr(shorted)));
  CHECK(return_loss_db(shorted) == doctest::Approx(0.0));

  const auto g2 = reflection({100.0, 0.0}, 50.0);
  CHECK(std::abs(g2) == doctest::Approx(1.0 / 3.0));
  CHECK(vswr(g2) == doctest::Approx(2.0));

  // VSWR 1.014 pairs with |gamma| ~ 0.00695, about -43.2 dB; the quoted -41.36 dB lies within 2 dB.
  const double gm = (1.014 - 1.0) / (1.014 + 1.0);
  CHECK(gm == doctest::Approx(0.00695).epsilon(1e-3));
  const double rl = return_loss_db(std::complex<double>(gm, 0.0));
  CHECK(rl == doctest::Approx(-43.2).epsilon(1e-3));
  CHECK(std::abs(rl - (-41.36)) < 2.0);
}

TEST_CASE("sweep grid") {
  const FrequencyResponse two = sweep(toy(), {9e9, 11e9, 2});
  REQUIRE(two.samples.size() == 2);
  CHECK(two.samples[0].f_hz == 9e9);
  CHECK(two.samples[1].f_hz == 11e9);

  const FrequencyResponse r = sweep(toy(), {9e9, 11e9, 401, 75.0});
  REQUIRE(r.samples.size() == 401);
  CHECK(r.reference_impedance == 75.0);
  CHECK(r.samples.back().f_hz == 11e9);
  for (std::size_t i = 1; i < r.samples.size(); ++i) CHECK(r.samples[i].f_hz > r.samples[i - 1].f_hz);

  for (SweepSpec bad : {SweepSpec{2.0, 1.0, 10}, SweepSpec{1.0, 2.0, 1}, SweepSpec{1.0, 2.0, 10, 0.0},
                        SweepSpec{0.0, 2.0, 10}}) {
    CHECK_THROWS_AS(sweep(toy(), bad), Error);
  }
}

TEST_CASE("property: every sample is internally consistent") {
  const FrequencyResponse r = sweep(toy(), {1e9, 40e9, 2000});
  for (const Sample& s : r.samples) {
    CHECK(s.vswr >= 1.0);
    CHECK(s.rl_db <= 0.0);
    CHECK(s.gamma_mag >= 0.0);
    CHECK(s.gamma_mag <= 1.0);
    CHECK(s.vswr == doctest::Approx((1.0 + s.gamma_mag) / (1.0 - s.gamma_mag)));
    CHECK(s.rl_db == doctest::Approx(std::max(20.0 * std::log10(s.gamma_mag), kReturnLossFloorDb)));
    const auto z = std::complex<double>(s.r_in_ohm, s.x_in_ohm);
    CHECK(s.gamma_mag == doctest::Approx(std::abs((z - 50.0) / (z + 50.0))));
  }
}

TEST_CASE("property: a sweep around f_r has exactly one return-loss minimum") {
  for (double q : {1.6, 5.0, 30.0}) {
    for (double r : {20.0, 60.0, 300.0}) {
      const Resonator m{r, 10e9, q};
      const double margin = 3.0 / q;
      const double lo = m.f_res * std::max(0.02, 1.0 - margin);
      const FrequencyResponse resp = sweep(m, {lo, m.f_res * (1.0 + margin), 1201});
      CHECK(local_minima(resp) == 1);
    }
  }
}

TEST_CASE("property: sweeps are bit-identical on repeat") {
  const Resonator m = resonator(reference_circ(), circ::CircModel{});
  const SweepSpec spec{20e9, 60e9, 1001};
  const FrequencyResponse a = sweep(m, spec);
  const FrequencyResponse b = sweep(m, spec);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].f_hz == b.samples[i].f_hz);
    CHECK(a.samples[i].r_in_ohm == b.samples[i].r_in_ohm);
    CHECK(a.samples[i].x_in_ohm == b.samples[i].x_in_ohm);
    CHECK(a.samples[i].rl_db == b.samples[i].rl_db);
  }
}

TEST_CASE("resonance extraction on an ideal resonator") {
  const Resonator m = toy();
  const ResonanceReport rep = extract_resonance(sweep(m, {9.3e9, 10.9e9, 161}));
  CHECK(std::abs(rep.f_res / m.f_res - 1.0) < 1e-3);
  CHECK_FALSE(rep.at_sweep_edge);
  CHECK(rep.bandwidth_found);
  CHECK_FALSE(rep.band_truncated);
  CHECK(rep.bandwidth_hz > 0.0);
  CHECK(rep.q_loaded == doctest::Approx(rep.f_res / rep.bandwidth_hz));
  CHECK(rep.f_res >= 9.3e9);
  CHECK(rep.f_res <= 10.9e9);

  // Analytic -10 dB band: |gamma|^2 = 0.1 with Z = R/(1 + jQ nu).
  const double r = m.r_res / 50.0;
  const double g2 = 0.1;
  // |(r - 1 - j Q nu)/(r + 1 + j Q nu)|^2 = g2 -> (r-1)^2 + y^2 = g2 ((r+1)^2 + y^2), y = Q nu
  const double y = std::sqrt((g2 * (r + 1) * (r + 1) - (r - 1) * (r - 1)) / (1.0 - g2));
  const double nu = y / m.q;
  const double f_hi = m.f_res * (nu + std::sqrt(nu * nu + 4.0)) / 2.0;
  const double f_lo = m.f_res * (-nu + std::sqrt(nu * nu + 4.0)) / 2.0;
  CHECK(rep.bandwidth_hz == doctest::Approx(f_hi - f_lo).epsilon(1e-3));
}

TEST_CASE("resonance extraction flags") {
  const Resonator poor{500.0, 10e9, 12.0};
  const ResonanceReport none = extract_resonance(sweep(poor, {9e9, 11e9, 101}));
  CHECK_FALSE(none.bandwidth_found);
  CHECK(none.bandwidth_hz == 0.0);
  CHECK(none.q_loaded == 0.0);

  const ResonanceReport edge = extract_resonance(sweep(toy(), {10.02e9, 11e9, 50}));
  CHECK(edge.at_sweep_edge);
  CHECK(edge.f_res == 10.02e9);
  CHECK(edge.bandwidth_found);
  CHECK(edge.band_truncated);

  FrequencyResponse one;
  one.samples.resize(1);
  CHECK_THROWS_AS(extract_resonance(one), Error);
}

TEST_CASE("rectangular resonator") {
  const rect::RectPatchDesign d = reference_rect();
  const Resonator m = resonator(d, rect::RectModel{});
  CHECK(m.f_res == doctest::Approx(g::rect39::f_res).epsilon(1e-12));
  CHECK(m.r_res == doctest::Approx(g::rect39::R_in_at_f_res).epsilon(1e-9));
  const ResonanceReport rep = extract_resonance(sweep(m, {37e9, 41e9, 801}));
  CHECK(std::abs(rep.f_res - 38.9e9) < 0.8e9);
  CHECK(rep.rl_min_db < -30.0);
}

TEST_CASE("circular resonator") {
  const circ::CircPatchDesign d = reference_circ();
  const Resonator m = resonator(d, circ::CircModel{});
  CHECK(m.f_res == doctest::Approx(kF).epsilon(1e-6));
  CHECK(m.r_res == doctest::Approx(g::circ39::R_res).epsilon(1e-6));
  CHECK(m.q == doctest::Approx(g::circ39::Q_T).epsilon(1e-6));
  const ResonanceReport rep = extract_resonance(sweep(m, {37e9, 41e9, 801}));
  CHECK(std::abs(rep.f_res - kF) < 0.5e9);
  CHECK(rep.vswr_at_res == doctest::Approx(g::circ39::R_res / 50.0).epsilon(1e-4));

  const ResonanceReport wide = extract_resonance(sweep(m, {20e9, 60e9, 4001}));
  CHECK(wide.bandwidth_found);
  CHECK_FALSE(wide.band_truncated);
  CHECK(wide.bandwidth_hz == doctest::Approx(g::circ39::bandwidth_10db).epsilon(1e-3));
}
