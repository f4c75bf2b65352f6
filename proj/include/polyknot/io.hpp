#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyknot/curve.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/errors.hpp"
#include "polyknot/obstruction.hpp"
#include "polyknot/synth.hpp"

namespace polyknot {

inline constexpr int kFormatVersion = 1;

/// On-disk curve. With basis "chebyshev-monic" index k multiplies T_k (so
/// index 0 multiplies T_0 = 2); with "monomial" it multiplies t^k.
struct CurveFile {
  std::string basis = "chebyshev-monic";
  std::vector<double> x, y;
  std::optional<std::vector<double>> z;
  std::string label;
};

SpaceCurve to_curve(const CurveFile& f);
CurveFile curve_file(const SpaceCurve& c);  // monomial basis
CurveFile curve_file(const ChebSeries& x, const ChebSeries& y, const ChebSeries& z, const std::string& label);

nlohmann::json to_json(const CurveFile& f);

/// ParseError naming the offending member on malformed input.
CurveFile parse_curve_file(const nlohmann::json& j);
CurveFile parse_curve_file_text(const std::string& text);

/// {"format": 1, "n": 7, "nodes": [...], "cos_alpha": false, "shaping": [...]}.
/// With cos_alpha the nodes are cos α values and are doubled on ingestion.
SynthSpec parse_synth_spec(const nlohmann::json& j);

struct VerifyReport {
  std::string label;
  std::optional<int> recognized;
  bool alternating = false;
  bool ordered = false;
  Diagram diagram;
  std::string gauss;
  int deg_x = 0, deg_y = 0, deg_z = -1;
  std::string minimality = "unknown";  // see minimality_label
};

VerifyReport verify_curve(const SpaceCurve& c);
nlohmann::json to_json(const VerifyReport& r);
/// "K_5, 5 crossings, alternating" or "not recognized, 4 crossings, not alternating".
std::string summary_line(const VerifyReport& r);
std::string crossing_table(const VerifyReport& r);

nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const SynthResult& r, const SynthSpec& spec);
nlohmann::json error_json(const Error& e);

/// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const nlohmann::json& j);

/// 0 success, 2 input error, 3 internal degeneracy.
int exit_code(ErrorKind kind);

}  // namespace polyknot
