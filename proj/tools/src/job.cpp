#include "app/job.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "patchant/error.hpp"

namespace patchant::app {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double number(const KeyValues& kv, const std::string& key) {
  const std::string& text = kv.at(key);
  if (text == "inf" || text == "+inf") return INFINITY;
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    fail(ErrorKind::Configuration, "key '" + key + "': '" + text + "' is not a number");
  }
  return value;
}

int integer(const KeyValues& kv, const std::string& key) {
  const std::string& text = kv.at(key);
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(ErrorKind::Configuration, "key '" + key + "': '" + text + "' is not an integer");
  }
  return value;
}

std::optional<double> optional_mm(const KeyValues& kv, const std::string& key) {
  if (!kv.contains(key)) return std::nullopt;
  return number(kv, key) * 1e-3;
}

const std::string& required(const KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) fail(ErrorKind::Configuration, "missing required key '" + key + "'");
  return it->second;
}

const char* const kKnownKeys[] = {
    "geometry",          "substrate.eps_r",  "substrate.h_mm",   "substrate.tan_delta",
    "substrate.sigma",   "f_design_ghz",     "sweep.f_start_ghz", "sweep.f_stop_ghz",
    "sweep.points",      "sweep.zref",       "model.variant",    "output.format",
    "output.path",       "pattern.step_deg", "rect.length_mm",   "rect.width_mm",
    "rect.feed_mm",      "circ.radius_mm",   "circ.feed_mm",
};

bool known(const std::string& key) {
  for (const char* k : kKnownKeys) {
    if (key == k) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Geometry geometry) noexcept {
  return geometry == Geometry::Rect ? "rect" : "circ";
}

std::string_view to_string(OutputFormat format) noexcept {
  return format == OutputFormat::Csv ? "csv" : "json";
}

void apply_variant(Variant& v, Geometry geometry, std::string_view tokens) {
  std::size_t pos = 0;
  while (pos <= tokens.size()) {
    const std::size_t comma = std::min(tokens.find(',', pos), tokens.size());
    const std::string_view tok = trim(tokens.substr(pos, comma - pos));
    pos = comma + 1;
    if (tok.empty()) continue;
    if (tok == "t1-printed" || tok == "t1-corrected") {
      v.surface_wave = parse_surface_wave_form(tok);
    } else if (geometry == Geometry::Rect && (tok == "literal" || tok == "calibrated")) {
      v.radiation = rect::parse_radiation_model(tok);
    } else if (geometry == Geometry::Rect && (tok == "width-inv-sqrt" || tok == "width-printed")) {
      v.width = rect::parse_width_formula(tok);
    } else if (geometry == Geometry::Circ && tok == "fringing") {
      v.fringing = circ::Fringing::On;
    } else if (geometry == Geometry::Circ && tok == "no-fringing") {
      v.fringing = circ::Fringing::Off;
    } else if (geometry == Geometry::Circ && (tok == "feed-radiation" || tok == "feed-total")) {
      v.feed_basis = circ::parse_feed_basis(tok);
    } else {
      fail(ErrorKind::Configuration, "variant '" + std::string(tok) + "' is not valid for geometry " +
                                         std::string(to_string(geometry)));
    }
  }
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::Configuration, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      fail(ErrorKind::Configuration, "line " + std::to_string(line_no) + ": empty key or value");
    }
    if (!kv.emplace(key, value).second) {
      fail(ErrorKind::Configuration, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return kv;
}

KeyValues load_key_values(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str());
}

JobConfig build_job(const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (!known(key)) fail(ErrorKind::Configuration, "unknown config key '" + key + "'");
  }

  JobConfig job;
  const std::string& geometry = required(kv, "geometry");
  if (geometry == "rect") {
    job.geometry = Geometry::Rect;
  } else if (geometry == "circ") {
    job.geometry = Geometry::Circ;
  } else {
    fail(ErrorKind::Configuration, "geometry must be rect or circ, got '" + geometry + "'");
  }

  required(kv, "substrate.eps_r");
  required(kv, "substrate.h_mm");
  required(kv, "f_design_ghz");
  job.substrate.eps_r = number(kv, "substrate.eps_r");
  job.substrate.h = number(kv, "substrate.h_mm") * 1e-3;
  if (kv.contains("substrate.tan_delta")) job.substrate.tan_delta = number(kv, "substrate.tan_delta");
  if (kv.contains("substrate.sigma")) job.substrate.sigma = number(kv, "substrate.sigma");
  job.f_design = number(kv, "f_design_ghz") * 1e9;
  if (kv.contains("sweep.zref")) job.reference_impedance = number(kv, "sweep.zref");

  const bool has_start = kv.contains("sweep.f_start_ghz");
  const bool has_stop = kv.contains("sweep.f_stop_ghz");
  if (has_start != has_stop) {
    fail(ErrorKind::Configuration, "sweep.f_start_ghz and sweep.f_stop_ghz must be given together");
  }
  if (has_start) {
    response::SweepSpec s;
    s.f_start = number(kv, "sweep.f_start_ghz") * 1e9;
    s.f_stop = number(kv, "sweep.f_stop_ghz") * 1e9;
    s.points = kv.contains("sweep.points") ? integer(kv, "sweep.points") : kDefaultSweepPoints;
    s.reference_impedance = job.reference_impedance;
    job.sweep = s;
  } else if (kv.contains("sweep.points")) {
    fail(ErrorKind::Configuration, "sweep.points given without a sweep range");
  }

  if (kv.contains("model.variant")) {
    job.variant_text = kv.at("model.variant");
    apply_variant(job.variant, job.geometry, job.variant_text);
  }

  if (kv.contains("output.format")) {
    const std::string& f = kv.at("output.format");
    if (f == "csv") {
      job.format = OutputFormat::Csv;
    } else if (f == "json") {
      job.format = OutputFormat::Json;
    } else {
      fail(ErrorKind::Configuration, "output.format must be csv or json, got '" + f + "'");
    }
  }
  if (kv.contains("output.path")) job.output_path = kv.at("output.path");

  const double step_deg = kv.contains("pattern.step_deg") ? number(kv, "pattern.step_deg") : kDefaultPatternStepDeg;
  job.pattern_step = step_deg * std::numbers::pi / 180.0;

  const bool rect_keys = kv.contains("rect.length_mm") || kv.contains("rect.width_mm") || kv.contains("rect.feed_mm");
  const bool circ_keys = kv.contains("circ.radius_mm") || kv.contains("circ.feed_mm");
  if ((job.geometry == Geometry::Rect && circ_keys) || (job.geometry == Geometry::Circ && rect_keys)) {
    fail(ErrorKind::Configuration, "geometry keys do not match geometry = " + geometry);
  }
  job.rect_length = optional_mm(kv, "rect.length_mm");
  job.rect_width = optional_mm(kv, "rect.width_mm");
  job.rect_feed = optional_mm(kv, "rect.feed_mm");
  if (job.rect_length.has_value() != job.rect_width.has_value()) {
    fail(ErrorKind::Configuration, "rect.length_mm and rect.width_mm must be given together");
  }
  job.circ_radius = optional_mm(kv, "circ.radius_mm");
  job.circ_feed = optional_mm(kv, "circ.feed_mm");
  return job;
}

response::SweepSpec effective_sweep(const JobConfig& job) {
  if (job.sweep) return *job.sweep;
  response::SweepSpec s;
  s.f_start = job.f_design * (1.0 - kDefaultSweepSpan);
  s.f_stop = job.f_design * (1.0 + kDefaultSweepSpan);
  s.points = kDefaultSweepPoints;
  s.reference_impedance = job.reference_impedance;
  return s;
}

}  // namespace patchant::app
