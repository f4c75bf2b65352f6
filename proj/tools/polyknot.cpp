#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polyknot/io.hpp"
#include "polyknot/render.hpp"

using namespace polyknot;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::BadInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::BadInput, "cannot write '" + path + "'");
  out << text;
}

SpaceCurve load_curve(const std::string& path) {
  SpaceCurve c = to_curve(parse_curve_file_text(read_input(path)));
  if (c.label.empty()) c.label = path;
  return c;
}

struct VerifyJob {
  std::string path;
  std::string text;
  int code = 0;
};

void run_verify(VerifyJob& job, bool as_json, bool single) {
  std::ostringstream out;
  try {
    const auto r = verify_curve(load_curve(job.path));
    if (as_json) {
      out << dump(to_json(r));
    } else {
      if (!single) out << job.path << ": ";
      out << summary_line(r) << "\n";
      if (single) out << crossing_table(r);
    }
    job.code = r.recognized ? 0 : 1;
  } catch (const Error& e) {
    out << dump(error_json(e));
    job.code = exit_code(e.kind());
  }
  job.text = out.str();
}

int cmd_verify(const std::vector<std::string>& files, bool as_json, int jobs) {
  std::vector<VerifyJob> work;
  for (const auto& f : files) work.push_back({f, {}, 0});
  const bool single = work.size() == 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < work.size();) run_verify(work[i], as_json, single);
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < std::max(1, jobs); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  for (const auto& j : work) {
    (j.code >= 2 ? std::cerr : std::cout) << j.text;
    code = std::max(code, j.code);
  }
  return code;
}

int cmd_synth(SynthSpec spec, const std::string& spec_file, bool cos_alpha, bool best_shaping, const std::string& out,
              const std::string& report) {
  if (!spec_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_input(spec_file));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    spec = parse_synth_spec(j);
  } else if (cos_alpha) {
    spec.nodes = nodes_from_cos(spec.nodes);
  }
  if (best_shaping && spec.shaping.empty()) {
    validate_spec(spec);
    spec.shaping = {best_t6_shaping(lift(interpolate_R1(spec.nodes)))};
  }
  const auto res = synthesize(spec);
  write_output(out, dump(to_json(curve_file(ChebSeries::single(3), res.y, res.z, res.curve.label))));
  const auto rep = dump(to_json(res, spec));
  if (!report.empty()) write_output(report, rep);
  std::cerr << (res.verified ? "verified K_" + std::to_string(spec.n) : std::string("not verified")) << ", degrees ("
            << res.curve.x.degree() << ", " << res.curve.y.degree() << ", " << res.curve.z->degree() << ")\n";
  for (const auto& f : res.failures) std::cerr << "  " << f << "\n";
  return res.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial torus knots: verify, certify, synthesize and draw (2, n) torus knot diagrams"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Build the diagram of a curve file and recognize it");
  std::vector<std::string> verify_files;
  bool verify_json = false;
  int jobs = 1;
  verify->add_option("files", verify_files, "Curve files ('-' for standard input)")->required();
  verify->add_flag("--json", verify_json, "Print the report as JSON");
  verify->add_option("--jobs,-j", jobs, "Verify files concurrently")->check(CLI::Range(1, 256));

  auto* obstruct = app.add_subcommand("obstruct", "Exact certificate for (T3, degree n + 1)");
  int obstruct_n = 0;
  obstruct->add_option("--n", obstruct_n, "Odd crossing number")->required();

  auto* synth = app.add_subcommand("synth", "Synthesize a (T3, y, z) curve for chosen crossing nodes");
  SynthSpec spec;
  std::string spec_file, synth_out, synth_report;
  bool cos_alpha = false, best_shaping = false;
  synth->add_option("--n", spec.n, "Crossing number");
  synth->add_option("--nodes", spec.nodes, "Nodes u = s + t, increasing")->delimiter(',');
  synth->add_flag("--cos-alpha", cos_alpha, "Nodes are given as cos(alpha) = u / 2");
  synth->add_option("--shaping", spec.shaping, "Coefficients of T6, T12, ...")->delimiter(',');
  synth->add_flag("--best-shaping", best_shaping, "Pick the T6 coefficient that spreads the crossings");
  synth->add_option("--spec", spec_file, "Synthesis spec JSON instead of --n/--nodes");
  synth->add_option("-o,--output", synth_out, "Curve file to write (default: standard output)");
  synth->add_option("--report", synth_report, "Write the verification report JSON here");

  auto* render = app.add_subcommand("render", "Draw the (x, y) projection as SVG");
  std::string render_file, render_out;
  RenderOptions ro;
  bool no_labels = false;
  std::vector<double> t_range;
  render->add_option("file", render_file, "Curve file")->required();
  render->add_option("-o,--output", render_out, "SVG file (default: standard output)");
  render->add_option("--width", ro.width, "Width in px");
  render->add_option("--height", ro.height, "Height in px");
  render->add_option("--samples", ro.samples, "Initial samples (at least 256)");
  render->add_option("--gap", ro.gap, "Under-strand break in stroke widths");
  render->add_option("--t-range", t_range, "Parameter range LO HI")->expected(2);
  render->add_flag("--no-labels", no_labels, "Omit crossing labels");

  auto* gauss = app.add_subcommand("gauss", "Print the Gauss code");
  std::string gauss_file;
  gauss->add_option("file", gauss_file, "Curve file")->required();

  auto* builtin_cmd = app.add_subcommand("builtin", "Emit a published curve");
  std::string builtin_name;
  builtin_cmd->add_option("name", builtin_name, "k3, k5, k7 or k9")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(verify_files, verify_json, jobs);
    if (*obstruct) {
      std::cout << dump(to_json(certify_impossible(obstruct_n)));
      return 0;
    }
    if (*synth) return cmd_synth(spec, spec_file, cos_alpha, best_shaping, synth_out, synth_report);
    if (*render) {
      const SpaceCurve c = load_curve(render_file);
      ro.labels = !no_labels;
      if (!t_range.empty()) ro.t_range = std::pair{t_range[0], t_range[1]};
      write_output(render_out, render_svg(c, build_diagram(c), ro));
      return 0;
    }
    if (*gauss) {
      std::cout << gauss_code(build_diagram(load_curve(gauss_file))) << "\n";
      return 0;
    }
    if (*builtin_cmd) {
      const auto s = builtin_series(builtin_name);
      std::cout << dump(to_json(curve_file(s.x, s.y, s.z, builtin(builtin_name).label)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << dump(error_json(e));
    return exit_code(e.kind());
  }
  return 2;
}
