#pragma once

// Reference values computed once with an independent SciPy/mpmath script
// (direct evaluation of each closed form, scipy.special.jv, adaptive quad,
// brentq) and frozen here.

namespace patchant::golden {

// 39 GHz rectangular reference patch: eps_r 4.7, h 0.8 mm, L 1.06 mm,
// W 0.98 mm, a 0.05 mm, tan_delta 0.001, sigma 5.8e7.
namespace rect39 {
inline constexpr double eps_ew = 3.09300118620619;
inline constexpr double Q_r = 4.22470278358233;
inline constexpr double R_c = 0.0325512881062959;
inline constexpr double R_d = 0.0778187650778641;
inline constexpr double R_d_over_R_c = 2.39065086529749;
inline constexpr double Z0w = 62.4506522789658;
inline constexpr double Z0a = 115.224181334027;
inline constexpr double W_eq = 0.0027459592222772;
inline constexpr double L_ef = 0.00232189589756749;
inline constexpr double R_r_literal = 32.9056490999227;
inline constexpr double K1 = 1522.01503317513;
inline constexpr double T1 = 1.40230968510688;
inline constexpr double delta_L = 0.000350087216258163;
inline constexpr double taper = 0.751403566227645;
inline constexpr double calibration_scale = 0.703966415086354;
inline constexpr double feed_position_resistance = -178.105430492688;
inline constexpr double f_res = 39281319698.7117;
inline constexpr double R_in_at_f_res = 51.7382863246224;
}  // namespace rect39

// eps_r 2.32, h 0.8 mm, 39 GHz.
namespace sub232 {
inline constexpr double K1h = 0.71771829277426;
inline constexpr double T1 = 0.362931303873183;
}  // namespace sub232

// Circular patch a = 1.21 mm on eps_r 2.32, h 0.8 mm, evaluated at 39 GHz.
namespace circ121 {
inline constexpr double a_eff = 0.00147132668949517;
inline constexpr double f_res = 39199891928.8875;
inline constexpr double f_res_no_fringing = 47665989438.2634;
inline constexpr double R_r = 424.87872462463;
inline constexpr double R_s = 154.201789515992;
inline constexpr double R_c = 0.38564158621598;
inline constexpr double R_d = 0.921934391781928;
inline constexpr double W_T = 6.66922776534984e-21;
inline constexpr double Q_T = 1.58847917019369;
inline constexpr double D = 5.12093790467162;
inline constexpr double e_r = 0.732059688781334;
inline constexpr double R_d_printed = 193815.911511181;
inline constexpr double R_c_printed = 463346.176562627;
inline constexpr double R_d_power_route = 195807.784423506;
inline constexpr double R_c_power_route = 468108.049264039;
}  // namespace circ121

// Radius synthesised for 39 GHz (fringing on) and its 50 ohm feed.
namespace circ39 {
inline constexpr double a = 0.00121689616382092;
inline constexpr double rho0_radiation_basis = 0.000328410746459611;
inline constexpr double rho0_total_basis = 0.000279360359829963;
inline constexpr double R_res = 68.3011142838414;
inline constexpr double Q_T = 1.59540793077705;
inline constexpr double bandwidth_10db = 16814799263.9264;
}  // namespace circ39

}  // namespace patchant::golden
