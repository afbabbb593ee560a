#pragma once

#include <numbers>
#include <string_view>

namespace patchant {

namespace constants {
inline constexpr double c = 2.99792458e8;                // m/s
inline constexpr double mu0 = 4e-7 * std::numbers::pi;   // H/m
inline constexpr double eps0 = 1.0 / (mu0 * c * c);      // F/m
inline constexpr double eta0 = 120.0 * std::numbers::pi; // ohm, the 120 pi vacuum resistance
}  // namespace constants

inline constexpr double kDefaultLossTangent = 0.001;
inline constexpr double kCopperConductivity = 5.8e7;  // S/m

/// Dielectric slab under the patch plus the patch-metal conductivity.
/// Lengths in metres. sigma may be +inf for a perfect conductor.
struct SubstrateSpec {
  double eps_r = 1.0;
  double h = 0.0;
  double tan_delta = kDefaultLossTangent;
  double sigma = kCopperConductivity;

  /// Throws ErrorKind::Domain naming the first violated invariant.
  void validate() const;
};

enum class Regime { Thick, Thin };

std::string_view to_string(Regime regime) noexcept;

struct RegimeReport {
  double ratio = 0.0;      // h / lambda0
  double threshold = 0.0;  // regime boundary at this eps_r
  Regime regime = Regime::Thin;
};

double free_space_wavelength(double f_hz);
double wavenumber(double f_hz);

/// h/lambda0 boundary above which a substrate counts as thick.
///
/// Anchored at 0.09 for eps_r = 2.32 and 0.03 for eps_r = 10, linear in
/// 1/sqrt(eps_r) between the anchors and clamped to [0.03, 0.09] outside.
double thick_threshold(double eps_r);

/// Advisory classification; callers surface a Thin result as a warning.
RegimeReport thickness_regime(const SubstrateSpec& sub, double f_hz);

}  // namespace patchant
