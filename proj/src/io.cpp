#include "polyknot/io.hpp"

#include <cmath>
#include <cstdio>

namespace polyknot {

using nlohmann::json;

namespace {

std::vector<double> coeff_array(const json& j, const std::string& field, bool allow_empty = false) {
  if (!j.contains(field)) throw ParseError(field, "missing member '" + field + "'");
  const json& a = j.at(field);
  if (!a.is_array()) throw ParseError(field, "'" + field + "' must be an array of numbers");
  if (a.empty() && !allow_empty) throw ParseError(field, "'" + field + "' must not be empty");
  std::vector<double> out;
  for (const json& v : a) {
    if (!v.is_number()) throw ParseError(field, "'" + field + "' must contain only numbers");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(field, "'" + field + "' contains a non-finite value");
    out.push_back(d);
  }
  return out;
}

void check_format(const json& j) {
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  if (!j.contains("format")) throw ParseError("format", "missing member 'format'");
  if (!j.at("format").is_number_integer() || j.at("format").get<int>() != kFormatVersion)
    throw ParseError("format", "unsupported format, expected " + std::to_string(kFormatVersion));
}

Polynomial to_poly(const std::vector<double>& c, const std::string& basis) {
  if (basis == "monomial") return Polynomial(c);
  return to_monomial(ChebSeries(c));
}

std::string fixed(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

SpaceCurve to_curve(const CurveFile& f) {
  SpaceCurve c;
  c.x = to_poly(f.x, f.basis);
  c.y = to_poly(f.y, f.basis);
  if (f.z) c.z = to_poly(*f.z, f.basis);
  c.label = f.label;
  return c;
}

CurveFile curve_file(const SpaceCurve& c) {
  CurveFile f;
  f.basis = "monomial";
  f.x = c.x.coeffs();
  f.y = c.y.coeffs();
  if (c.z) f.z = c.z->coeffs();
  f.label = c.label;
  return f;
}

CurveFile curve_file(const ChebSeries& x, const ChebSeries& y, const ChebSeries& z, const std::string& label) {
  return {"chebyshev-monic", x.coeffs(), y.coeffs(), z.coeffs(), label};
}

json to_json(const CurveFile& f) {
  json j;
  j["format"] = kFormatVersion;
  j["basis"] = f.basis;
  j["x"] = f.x;
  j["y"] = f.y;
  if (f.z) j["z"] = *f.z;
  j["label"] = f.label;
  return j;
}

CurveFile parse_curve_file(const json& j) {
  check_format(j);
  CurveFile f;
  if (j.contains("basis")) {
    if (!j.at("basis").is_string()) throw ParseError("basis", "'basis' must be a string");
    f.basis = j.at("basis").get<std::string>();
    if (f.basis != "chebyshev-monic" && f.basis != "monomial")
      throw ParseError("basis", "'basis' must be \"chebyshev-monic\" or \"monomial\"");
  }
  f.x = coeff_array(j, "x");
  f.y = coeff_array(j, "y");
  if (j.contains("z") && !j.at("z").is_null()) f.z = coeff_array(j, "z");
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw ParseError("label", "'label' must be a string");
    f.label = j.at("label").get<std::string>();
  }
  return f;
}

CurveFile parse_curve_file_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_curve_file(j);
}

SynthSpec parse_synth_spec(const json& j) {
  check_format(j);
  SynthSpec spec;
  if (!j.contains("n")) throw ParseError("n", "missing member 'n'");
  if (!j.at("n").is_number_integer()) throw ParseError("n", "'n' must be an integer");
  spec.n = j.at("n").get<int>();
  const auto nodes = coeff_array(j, "nodes");
  bool cos_alpha = false;
  if (j.contains("cos_alpha")) {
    if (!j.at("cos_alpha").is_boolean()) throw ParseError("cos_alpha", "'cos_alpha' must be a boolean");
    cos_alpha = j.at("cos_alpha").get<bool>();
  }
  spec.nodes = cos_alpha ? nodes_from_cos(nodes) : nodes;
  if (j.contains("shaping")) spec.shaping = coeff_array(j, "shaping", true);
  return spec;
}

VerifyReport verify_curve(const SpaceCurve& c) {
  VerifyReport r;
  r.label = c.label;
  r.diagram = build_diagram(c);
  std::vector<CrossingParams> params;
  for (const auto& cr : r.diagram.crossings) params.push_back(cr.params);
  r.ordered = crossing_order_check(params);
  r.alternating = is_alternating(r.diagram);
  r.recognized = recognize_torus_2n(r.diagram);
  r.gauss = gauss_code(r.diagram);
  r.deg_x = c.x.degree();
  r.deg_y = c.y.degree();
  r.deg_z = c.z ? c.z->degree() : -1;
  if (r.recognized) r.minimality = minimality_label(*r.recognized, r.deg_x, r.deg_y, r.deg_z);
  return r;
}

json to_json(const VerifyReport& r) {
  json j;
  j["format"] = kFormatVersion;
  j["label"] = r.label;
  j["recognized"] = r.recognized ? json("K_" + std::to_string(*r.recognized)) : json(nullptr);
  j["crossing_count"] = r.diagram.crossings.size();
  j["alternating"] = r.alternating;
  j["ordered"] = r.ordered;
  j["gauss"] = r.gauss;
  j["degrees"] = {r.deg_x, r.deg_y, r.deg_z};
  j["minimality"] = r.minimality;
  json rows = json::array();
  for (const auto& c : r.diagram.crossings)
    rows.push_back({{"index", c.index},
                    {"s", c.params.s},
                    {"t", c.params.t},
                    {"u", c.params.u},
                    {"first_pass", c.first_pass_over ? "over" : "under"}});
  j["crossings"] = rows;
  return j;
}

std::string summary_line(const VerifyReport& r) {
  const std::size_t n = r.diagram.crossings.size();
  std::string s = r.recognized ? "K_" + std::to_string(*r.recognized) : std::string("not recognized");
  s += ", " + std::to_string(n) + (n == 1 ? " crossing, " : " crossings, ");
  s += r.alternating ? "alternating" : "not alternating";
  return s;
}

std::string crossing_table(const VerifyReport& r) {
  std::string out = "  #            s            t            u  first pass\n";
  for (const auto& c : r.diagram.crossings) {
    char line[160];
    std::snprintf(line, sizeof line, "%3d %12s %12s %12s  %s\n", c.index, fixed(c.params.s, 8).c_str(),
                  fixed(c.params.t, 8).c_str(), fixed(c.params.u, 8).c_str(), c.first_pass_over ? "over" : "under");
    out += line;
  }
  return out;
}

json to_json(const ObstructionReport& r) {
  json j;
  j["format"] = kFormatVersion;
  j["n"] = r.n;
  j["case"] = std::string(to_string(r.kind));
  j["newton_sum"] = r.newton_sum;
  j["expression"] = r.expression;
  j["inequality"] = {{"lhs", to_string(r.inequality.lhs)},
                     {"relation", r.inequality.relation},
                     {"rhs", to_string(r.inequality.rhs)}};
  j["impossible"] = r.impossible;
  j["statement"] = r.statement;
  return j;
}

json to_json(const SynthResult& r, const SynthSpec& spec) {
  json j;
  j["format"] = kFormatVersion;
  j["n"] = spec.n;
  j["nodes"] = spec.nodes;
  j["shaping"] = spec.shaping;
  j["r1"] = r.r1.coeffs();
  j["r2"] = r.r2.coeffs();
  j["extra_roots"] = r.extra_roots;
  j["verified"] = r.verified;
  j["failures"] = r.failures;
  j["degrees"] = {r.curve.x.degree(), r.curve.y.degree(), r.curve.z ? r.curve.z->degree() : -1};
  j["gauss"] = gauss_code(r.diagram);
  j["minimality"] = r.curve.z ? minimality_label(spec.n, r.curve.x.degree(), r.curve.y.degree(), r.curve.z->degree())
                              : std::string("unknown");
  return j;
}

json error_json(const Error& e) {
  json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) err["field"] = pe->field();
  return {{"format", kFormatVersion}, {"error", err}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput:
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::BadRange:
    case ErrorKind::DomainError:
    case ErrorKind::NotMonic:
      return 2;
    case ErrorKind::DegenerateCrossing:
    case ErrorKind::NonRegular:
    case ErrorKind::ZCollision:
    case ErrorKind::SingularSystem:
    case ErrorKind::Unliftable:
    case ErrorKind::ExtraCrossings:
      return 3;
  }
  return 3;
}

}  // namespace polyknot
