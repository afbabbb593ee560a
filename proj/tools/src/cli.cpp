#include "app/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "patchant/circpatch.hpp"
#include "patchant/media.hpp"
#include "patchant/rectpatch.hpp"
#include "patchant/response.hpp"

namespace patchant::app {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPatternFloorDb = -100.0;

std::string num(double v) { return fmt::format("{:.12g}", v); }

double to_db(double ratio) { return 10.0 * std::log10(ratio); }

// ---- resolved designs ----

rect::RectPatchDesign resolve_rect(const JobConfig& job) {
  rect::RectPatchDesign d;
  if (job.rect_length) {
    d.L = *job.rect_length;
    d.W = *job.rect_width;
    d.substrate = job.substrate;
    d.f_design = job.f_design;
  } else {
    d = rect::synth_rect(job.f_design, job.substrate, job.variant.width);
  }
  d.feed_offset_a = 0.0;
  d.validate();
  d.feed_offset_a = job.rect_feed ? *job.rect_feed
                                  : rect::feed_offset_for_match(d, job.f_design, job.reference_impedance,
                                                                job.variant.rect_model());
  d.validate();
  return d;
}

circ::CircPatchDesign resolve_circ(const JobConfig& job) {
  const circ::CircModel model = job.variant.circ_model();
  const double a = job.circ_radius ? *job.circ_radius
                                   : circ::resonant_radius(job.f_design, job.substrate, model.fringing);
  circ::CircPatchDesign d = circ::make_circ_design(a, job.substrate, job.f_design, model.fringing);
  d.rho0 = job.circ_feed ? *job.circ_feed
                         : circ::feed_radius_for_match(d, job.f_design, job.reference_impedance, model);
  d.validate();
  return d;
}

// ---- report pieces ----

Json header(std::string_view command, const JobConfig& job) {
  Json j;
  j["command"] = command;
  j["geometry"] = to_string(job.geometry);

  Json v;
  v["model_variant"] = job.variant_text;
  if (job.geometry == Geometry::Rect) {
    v["radiation"] = rect::to_string(job.variant.radiation);
    v["width"] = rect::to_string(job.variant.width);
  } else {
    v["fringing"] = circ::to_string(job.variant.fringing);
    v["feed_basis"] = circ::to_string(job.variant.feed_basis);
  }
  v["surface_wave"] = to_string(job.variant.surface_wave);
  j["variant"] = v;

  j["defaults"] = {{"tan_delta", kDefaultLossTangent},
                   {"sigma", kCopperConductivity},
                   {"reference_impedance", response::kDefaultReferenceImpedance}};
  j["substrate"] = {{"eps_r", job.substrate.eps_r},
                    {"h", job.substrate.h},
                    {"tan_delta", job.substrate.tan_delta},
                    {"sigma", std::isinf(job.substrate.sigma) ? Json("inf") : Json(job.substrate.sigma)}};
  j["f_design"] = job.f_design;
  j["reference_impedance"] = job.reference_impedance;

  const RegimeReport regime = thickness_regime(job.substrate, job.f_design);
  j["regime"] = {{"ratio", regime.ratio}, {"threshold", regime.threshold}, {"regime", to_string(regime.regime)}};
  return j;
}

Json rect_design_json(const rect::RectPatchDesign& d) {
  return {{"L", d.L}, {"W", d.W}, {"feed_offset_a", d.feed_offset_a}, {"f_design", d.f_design},
          {"f_res", rect::resonant_frequency_rect(d)}};
}

Json rect_derived_json(const rect::RectDerived& d) {
  return {{"eps_eff", d.eps_eff}, {"eps_ew", d.eps_ew}, {"Q_r", d.Q_r},     {"Z0w", d.Z0w},
          {"Z0a", d.Z0a},         {"W_eq", d.W_eq},     {"L_ef", d.L_ef},   {"delta_L", d.delta_L},
          {"K1", d.K1},           {"T1", d.T1},         {"lambda_d", d.lambda_d}};
}

Json circ_design_json(const circ::CircPatchDesign& d, circ::Fringing fringing) {
  const circ::CavityField field = circ::cavity_field(d, circ::kReferenceField);
  return {{"a", d.a},
          {"a_eff", d.a_eff},
          {"rho0", d.rho0},
          {"mode_n", d.mode_n},
          {"f_design", d.f_design},
          {"f_res", circ::resonant_frequency(d.a, d.substrate, fringing)},
          {"k11", field.k11}};
}

Json breakdown_json(const ResistanceBreakdown& b) {
  return {{"R_r", b.R_r}, {"R_s", b.R_s}, {"R_c", b.R_c}, {"R_d", b.R_d}, {"R_total", b.R_total},
          {"sum_check", b.R_r + b.R_s + b.R_c + b.R_d}};
}

Json warnings_json(const std::vector<std::string>& w) {
  Json arr = Json::array();
  for (const auto& s : w) arr.push_back(s);
  return arr;
}

// ---- commands ----

Json cmd_design(const JobConfig& job, std::vector<std::string>& notes) {
  Json j = header("design", job);
  if (job.geometry == Geometry::Rect) {
    const rect::RectPatchDesign d = resolve_rect(job);
    const rect::RectAnalysis an = rect::analyze_rect(d, job.f_design, job.variant.rect_model());
    j["design"] = rect_design_json(d);
    j["derived"] = rect_derived_json(an.derived);
    j["R_in"] = an.R_in;
    notes = rect::model_warnings(d, job.f_design);
  } else {
    const circ::CircPatchDesign d = resolve_circ(job);
    j["design"] = circ_design_json(d, job.variant.fringing);
    j["R_in"] = circ::input_resistance_circ(d, job.f_design, job.variant.circ_model());
    notes = circ::model_warnings(d, job.f_design);
  }
  j["warnings"] = warnings_json(notes);
  return j;
}

Json cmd_analyze(const JobConfig& job, std::vector<std::string>& notes) {
  Json j = header("analyze", job);
  if (job.geometry == Geometry::Rect) {
    const rect::RectPatchDesign d = resolve_rect(job);
    const rect::RectAnalysis an = rect::analyze_rect(d, job.f_design, job.variant.rect_model());
    j["design"] = rect_design_json(d);
    j["breakdown"] = breakdown_json(an.breakdown);
    j["R_in"] = an.R_in;
    j["derived"] = rect_derived_json(an.derived);
    notes = rect::model_warnings(d, job.f_design);
  } else {
    const circ::CircPatchDesign d = resolve_circ(job);
    const circ::CircLossReport rep = circ::analyze_circ(d, job.f_design, job.variant.circ_model());
    j["design"] = circ_design_json(d, job.variant.fringing);
    j["breakdown"] = breakdown_json(rep.breakdown);
    j["R_in"] = rep.R_in;
    j["e_r"] = rep.e_r;
    j["D"] = rep.D;
    j["D_dB"] = to_db(rep.D);
    j["G"] = rep.G;
    j["G_dB"] = to_db(rep.G);
    j["Q_T"] = rep.Q_T;
    j["powers"] = {{"E0", circ::kReferenceField}, {"P_r", rep.P_r}, {"P_s", rep.P_s},
                   {"P_c", rep.P_c},              {"P_d", rep.P_d}, {"W_T", rep.W_T}};
    j["printed"] = {{"W_T_closed_form", rep.printed.W_T_closed_form},
                    {"W_T_ratio", rep.printed.W_T_ratio},
                    {"R_d_printed", rep.printed.R_d_printed},
                    {"R_c_printed", rep.printed.R_c_printed},
                    {"R_d_power_route", rep.printed.R_d_power_route},
                    {"R_c_power_route", rep.printed.R_c_power_route}};
    notes = circ::model_warnings(d, job.f_design);
  }
  j["warnings"] = warnings_json(notes);
  return j;
}

response::Resonator job_resonator(const JobConfig& job, Json& j, std::vector<std::string>& notes) {
  if (job.geometry == Geometry::Rect) {
    const rect::RectPatchDesign d = resolve_rect(job);
    j["design"] = rect_design_json(d);
    notes = rect::model_warnings(d, job.f_design);
    return response::resonator(d, job.variant.rect_model());
  }
  const circ::CircPatchDesign d = resolve_circ(job);
  j["design"] = circ_design_json(d, job.variant.fringing);
  notes = circ::model_warnings(d, job.f_design);
  return response::resonator(d, job.variant.circ_model());
}

std::string sweep_csv(const response::FrequencyResponse& r) {
  std::string out = "f_hz,r_in_ohm,x_in_ohm,gamma_mag,rl_db,vswr\n";
  for (const auto& s : r.samples) {
    out += fmt::format("{},{},{},{},{},{}\n", num(s.f_hz), num(s.r_in_ohm), num(s.x_in_ohm), num(s.gamma_mag),
                       num(s.rl_db), num(s.vswr));
  }
  return out;
}

Json resonance_json(const response::ResonanceReport& r) {
  return {{"f_res", r.f_res},
          {"rl_min_db", r.rl_min_db},
          {"vswr_at_res", r.vswr_at_res},
          {"bandwidth_hz", r.bandwidth_hz},
          {"q_loaded", r.q_loaded},
          {"at_sweep_edge", r.at_sweep_edge},
          {"bandwidth_found", r.bandwidth_found},
          {"band_truncated", r.band_truncated}};
}

std::string resonance_note(const response::ResonanceReport& r) {
  return fmt::format("resonance {} Hz, RL {} dB, VSWR {}, -10 dB bandwidth {} Hz{}{}", num(r.f_res),
                     num(r.rl_min_db), num(r.vswr_at_res), num(r.bandwidth_hz),
                     r.at_sweep_edge ? " (minimum at sweep edge)" : "",
                     r.band_truncated ? " (band truncated by sweep)" : "");
}

std::string cmd_sweep(const JobConfig& job, std::vector<std::string>& notes) {
  Json j = header("sweep", job);
  const response::Resonator model = job_resonator(job, j, notes);
  const response::SweepSpec spec = effective_sweep(job);
  const response::FrequencyResponse resp = response::sweep(model, spec);
  const response::ResonanceReport rep = response::extract_resonance(resp);
  notes.push_back(resonance_note(rep));
  if (job.format == OutputFormat::Csv) return sweep_csv(resp);

  j["resonator"] = {{"r_res", model.r_res}, {"f_res", model.f_res}, {"q", model.q}};
  j["sweep"] = {{"f_start", spec.f_start},
                {"f_stop", spec.f_stop},
                {"points", spec.points},
                {"reference_impedance", spec.reference_impedance}};
  j["resonance"] = resonance_json(rep);
  Json samples = Json::array();
  for (const auto& s : resp.samples) {
    samples.push_back({{"f_hz", s.f_hz},
                       {"r_in_ohm", s.r_in_ohm},
                       {"x_in_ohm", s.x_in_ohm},
                       {"gamma_mag", s.gamma_mag},
                       {"rl_db", s.rl_db},
                       {"vswr", std::isinf(s.vswr) ? Json("inf") : Json(s.vswr)}});
  }
  j["samples"] = samples;
  j["warnings"] = warnings_json(notes);
  return j.dump(2) + "\n";
}

double floored(double db) { return std::max(db, kPatternFloorDb); }

std::string cmd_pattern(const JobConfig& job, std::vector<std::string>& notes) {
  if (job.geometry != Geometry::Circ) {
    fail(ErrorKind::Configuration, "pattern is available for geometry circ only");
  }
  const circ::CircPatchDesign d = resolve_circ(job);
  notes = circ::model_warnings(d, job.f_design);
  const auto e = circ::pattern_cut(d, job.f_design, circ::Plane::E, job.pattern_step);
  const auto h = circ::pattern_cut(d, job.f_design, circ::Plane::H, job.pattern_step);
  constexpr double deg = 180.0 / std::numbers::pi;

  if (job.format == OutputFormat::Csv) {
    std::string out = "theta_deg,e_plane_db,h_plane_db\n";
    for (std::size_t i = 0; i < e.size(); ++i) {
      out += fmt::format("{},{},{}\n", num(e[i].theta * deg), num(floored(e[i].rel_db)), num(floored(h[i].rel_db)));
    }
    return out;
  }
  Json j = header("pattern", job);
  j["design"] = circ_design_json(d, job.variant.fringing);
  j["step_deg"] = job.pattern_step * deg;
  j["floor_db"] = kPatternFloorDb;
  Json points = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) {
    points.push_back({{"theta_deg", e[i].theta * deg},
                      {"e_plane_db", floored(e[i].rel_db)},
                      {"h_plane_db", floored(h[i].rel_db)}});
  }
  j["pattern"] = points;
  j["warnings"] = warnings_json(notes);
  return j.dump(2) + "\n";
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out += prefix + "," + j.get<std::string>() + "\n";
  } else if (j.is_number_float()) {
    out += prefix + "," + num(j.get<double>()) + "\n";
  } else {
    out += prefix + "," + j.dump() + "\n";
  }
}

std::string emit(const Json& j, OutputFormat format) {
  if (format == OutputFormat::Json) return j.dump(2) + "\n";
  std::string out = "quantity,value\n";
  flatten(j, "", out);
  return out;
}

struct Flags {
  std::string config;
  std::optional<std::string> out, format, variant, geometry, eps_r, h_mm, f_ghz, tan_delta, sigma, zref;
};

void add_options(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "Job file (dotted key = value)");
  sub->add_option("--out", f.out, "Output path; stdout when omitted");
  sub->add_option("--format", f.format, "csv or json");
  sub->add_option("--variant", f.variant, "Comma-separated model variant tokens");
  sub->add_option("--geometry", f.geometry, "rect or circ");
  sub->add_option("--eps-r", f.eps_r, "Relative permittivity");
  sub->add_option("--h-mm", f.h_mm, "Substrate height, mm");
  sub->add_option("--f-ghz", f.f_ghz, "Design frequency, GHz");
  sub->add_option("--tan-delta", f.tan_delta, "Loss tangent");
  sub->add_option("--sigma", f.sigma, "Metal conductivity, S/m (inf allowed)");
  sub->add_option("--zref", f.zref, "Reference impedance, ohm");
}

JobConfig job_from_flags(const Flags& f) {
  KeyValues kv = f.config.empty() ? KeyValues{} : load_key_values(f.config);
  auto put = [&kv](const char* key, const std::optional<std::string>& v) {
    if (v) kv[key] = *v;
  };
  put("geometry", f.geometry);
  put("substrate.eps_r", f.eps_r);
  put("substrate.h_mm", f.h_mm);
  put("f_design_ghz", f.f_ghz);
  put("substrate.tan_delta", f.tan_delta);
  put("substrate.sigma", f.sigma);
  put("sweep.zref", f.zref);
  put("output.format", f.format);
  put("output.path", f.out);
  if (f.variant) {
    const auto it = kv.find("model.variant");
    kv["model.variant"] = it == kv.end() ? *f.variant : it->second + "," + *f.variant;
  }
  return build_job(kv);
}

void write_output(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) fail(ErrorKind::Io, "cannot write '" + path + "'");
  file << body;
  if (!file) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace

std::string render(Command command, const JobConfig& job, std::vector<std::string>& notes) {
  switch (command) {
    case Command::Design:
      return emit(cmd_design(job, notes), job.format);
    case Command::Analyze:
      return emit(cmd_analyze(job, notes), job.format);
    case Command::Sweep:
      return cmd_sweep(job, notes);
    case Command::Pattern:
      return cmd_pattern(job, notes);
  }
  return {};
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Configuration:
    case ErrorKind::Io:
      return 1;
    case ErrorKind::Convergence:
      return 3;
    default:
      return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thick-substrate microstrip patch calculator"};
  app.require_subcommand(1);
  Flags flags;
  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"design", "Synthesise a patch and place its feed", Command::Design},
      {"analyze", "Resistance breakdown at the design frequency", Command::Analyze},
      {"sweep", "Return-loss sweep and resonance extraction", Command::Sweep},
      {"pattern", "E- and H-plane cuts of the circular patch", Command::Pattern},
  };
  std::vector<CLI::App*> subs;
  for (const auto& e : entries) {
    subs.push_back(app.add_subcommand(e.name, e.help));
    add_options(subs.back(), flags);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Command command = Command::Design;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) command = entries[i].command;
  }

  try {
    const JobConfig job = job_from_flags(flags);
    std::vector<std::string> notes;
    const std::string body = render(command, job, notes);
    write_output(body, job.output_path, out);
    for (const auto& n : notes) err << "note: " << n << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace patchant::app
