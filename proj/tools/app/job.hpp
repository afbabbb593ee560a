#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "patchant/circpatch.hpp"
#include "patchant/media.hpp"
#include "patchant/rectpatch.hpp"
#include "patchant/response.hpp"

namespace patchant::app {

enum class Geometry { Rect, Circ };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Geometry geometry) noexcept;
std::string_view to_string(OutputFormat format) noexcept;

/// Variant flags for both geometries; only the ones matching the job's
/// geometry are accepted from model.variant and --variant.
struct Variant {
  rect::RadiationModel radiation = rect::RadiationModel::Calibrated;
  rect::WidthFormula width = rect::WidthFormula::InverseSqrtEps;
  circ::Fringing fringing = circ::Fringing::On;
  circ::FeedBasis feed_basis = circ::FeedBasis::Radiation;
  SurfaceWaveForm surface_wave = SurfaceWaveForm::AsPrinted;

  rect::RectModel rect_model() const { return {radiation, surface_wave}; }
  circ::CircModel circ_model() const { return {fringing, surface_wave, feed_basis}; }
};

/// Apply a comma-separated list of variant tokens on top of v.
/// Unknown tokens, or tokens belonging to the other geometry, throw
/// ErrorKind::Configuration.
void apply_variant(Variant& v, Geometry geometry, std::string_view tokens);

/// One CLI job. Lengths in metres, frequencies in Hz (the text format uses
/// mm and GHz).
struct JobConfig {
  Geometry geometry = Geometry::Rect;
  SubstrateSpec substrate;
  double f_design = 0.0;
  std::optional<response::SweepSpec> sweep;
  double reference_impedance = response::kDefaultReferenceImpedance;
  Variant variant;
  std::string variant_text;  // tokens as given, for reports
  OutputFormat format = OutputFormat::Json;
  std::string output_path;  // empty: stdout
  double pattern_step = 0.0;  // rad

  std::optional<double> rect_length;
  std::optional<double> rect_width;
  std::optional<double> rect_feed;
  std::optional<double> circ_radius;
  std::optional<double> circ_feed;
};

using KeyValues = std::map<std::string, std::string>;

/// Flat "dotted.key = value" text; '#' starts a comment. Duplicate keys and
/// malformed lines throw ErrorKind::Configuration.
KeyValues parse_key_values(std::string_view text);

/// Reads a file and parses it with parse_key_values; ErrorKind::Io when the
/// file cannot be read.
KeyValues load_key_values(const std::string& path);

/// Typed job from raw keys. Every key must be known.
JobConfig build_job(const KeyValues& kv);

inline constexpr int kDefaultSweepPoints = 1001;
inline constexpr double kDefaultSweepSpan = 0.5;  // +- fraction of f_design
inline constexpr double kDefaultPatternStepDeg = 1.0;

/// Sweep in effect: the configured one or f_design (1 +- kDefaultSweepSpan).
response::SweepSpec effective_sweep(const JobConfig& job);

}  // namespace patchant::app
