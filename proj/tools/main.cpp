#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/cases.hpp"
#include "schur/engine.hpp"
#include "schur/errors.hpp"
#include "schur/jury.hpp"
#include "schur/poly.hpp"
#include "schur/region.hpp"
#include "schur/report.hpp"
#include "schur/roots.hpp"

namespace {

using schur::Backend;
using schur::MonicPolynomial;
using schur::Scalar;

constexpr int kUsageError = 64;
constexpr int kInternalError = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared option block for the polynomial-input subcommands.
struct PolyOpts {
  std::vector<std::string> coeffs;
  std::string file;
  std::string backend = "exact";
  bool ascending = false;
};

struct OutputOpts {
  std::string format;
  std::string out;
};

Backend parse_backend(const std::string& name) {
  try {
    return schur::backend_from_name(name);
  } catch (const schur::invalid_input&) {
    throw UsageError("unknown backend: " + name);
  }
}

MonicPolynomial poly_from_tokens(const std::vector<std::string>& tokens, Backend backend,
                                 bool ascending) {
  if (tokens.size() < 2) {
    throw UsageError("need at least two coefficients (degree >= 1)");
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(tokens.size());
  for (const std::string& tok : tokens) coeffs.push_back(schur::parse_scalar(tok, backend));
  if (ascending) std::reverse(coeffs.begin(), coeffs.end());
  return schur::normalize(coeffs);
}

// One polynomial per line, whitespace-separated coefficients, '#' starts
// a comment.
std::vector<MonicPolynomial> polys_from_file(const std::string& path, Backend backend,
                                             bool ascending) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  std::vector<MonicPolynomial> polys;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    polys.push_back(poly_from_tokens(tokens, backend, ascending));
  }
  if (polys.empty()) throw UsageError("no polynomials in file: " + path);
  return polys;
}

std::vector<MonicPolynomial> gather_polys(const PolyOpts& opts, Backend backend) {
  if (!opts.file.empty()) {
    if (!opts.coeffs.empty()) {
      throw UsageError("give coefficients inline or with --file, not both");
    }
    return polys_from_file(opts.file, backend, opts.ascending);
  }
  return {poly_from_tokens(opts.coeffs, backend, opts.ascending)};
}

void write_output(const OutputOpts& out, const std::string& text, bool binary = false) {
  if (out.out.empty()) {
    std::cout << text;
    if (!binary && (text.empty() || text.back() != '\n')) std::cout << '\n';
    return;
  }
  std::ofstream os(out.out, binary ? std::ios::binary : std::ios::out);
  if (!os) throw std::runtime_error("cannot open output file: " + out.out);
  os << text;
  if (!binary && (text.empty() || text.back() != '\n')) os << '\n';
  if (!os) throw std::runtime_error("write failed: " + out.out);
}

std::string join_json_array(const std::vector<std::string>& objects) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const std::string& obj : objects) arr.push_back(nlohmann::ordered_json::parse(obj));
  return arr.dump(2);
}

// Table-3 style trace: one line per stage with the running polynomial
// and its l1 sum written as "1 + tail"; the certifying row ends "< 2".
std::string trace_table(const MonicPolynomial& p, const schur::Certificate& cert) {
  std::ostringstream os;
  std::vector<std::string> row_poly;
  std::vector<std::string> row_sum;
  for (const schur::StageTrace& t : cert.trace) {
    row_poly.push_back(schur::render_stage(t, p.degree()));
    std::string sum = "1 + " + t.tail_sum.str();
    if (cert.verdict == schur::Verdict::Certified && cert.deciding_stage &&
        t.stage == *cert.deciding_stage) {
      sum += " < 2";
    }
    row_sum.push_back(std::move(sum));
  }
  size_t poly_width = 0;
  for (const std::string& s : row_poly) poly_width = std::max(poly_width, s.size());
  os << "step  " << std::left << std::setw(static_cast<int>(poly_width)) << "polynomial"
     << "  l1 norm\n";
  for (size_t i = 0; i < row_poly.size(); ++i) {
    os << std::right << std::setw(4) << cert.trace[i].stage << "  " << std::left
       << std::setw(static_cast<int>(poly_width)) << row_poly[i] << "  " << row_sum[i] << '\n';
  }
  os << "verdict: " << schur::verdict_name(cert.verdict);
  if (cert.deciding_stage) os << " (stage " << *cert.deciding_stage << ")";
  os << '\n';
  return os.str();
}

int run_engine_cmd(const PolyOpts& popts, const OutputOpts& oopts, const schur::AlgoConfig& cfg,
                   const std::string& format) {
  const Backend backend = parse_backend(popts.backend);
  const std::vector<MonicPolynomial> polys = gather_polys(popts, backend);
  std::vector<schur::Certificate> certs;
  certs.reserve(polys.size());
  for (const MonicPolynomial& p : polys) certs.push_back(schur::run_algorithm(p, cfg));

  std::string text;
  if (format == "json") {
    if (polys.size() == 1) {
      text = schur::certificate_json(polys[0], certs[0]);
    } else {
      std::vector<std::string> objects;
      for (size_t i = 0; i < polys.size(); ++i) {
        objects.push_back(schur::certificate_json(polys[i], certs[i]));
      }
      text = join_json_array(objects);
    }
  } else {
    std::ostringstream os;
    for (size_t i = 0; i < polys.size(); ++i) {
      if (i > 0) os << '\n';
      os << trace_table(polys[i], certs[i]);
    }
    text = os.str();
  }
  write_output(oopts, text);

  for (const schur::Certificate& cert : certs) {
    if (cert.verdict != schur::Verdict::Certified) return schur::verdict_exit_code(cert.verdict);
  }
  return 0;
}

int jury_exit_code(schur::JuryVerdict v) {
  switch (v) {
    case schur::JuryVerdict::Stable:
      return 0;
    case schur::JuryVerdict::Unstable:
      return 1;
    case schur::JuryVerdict::Singular:
      return 3;
  }
  return kInternalError;
}

int run_jury_cmd(const PolyOpts& popts, const OutputOpts& oopts, const std::string& format) {
  const Backend backend = parse_backend(popts.backend);
  if (backend != Backend::exact) throw UsageError("jury runs on the exact backend only");
  const std::vector<MonicPolynomial> polys = gather_polys(popts, backend);
  std::vector<schur::JuryTable> tables;
  tables.reserve(polys.size());
  for (const MonicPolynomial& p : polys) tables.push_back(schur::jury_table(p));

  std::string text;
  if (format == "json") {
    if (polys.size() == 1) {
      text = schur::jury_json(polys[0], tables[0]);
    } else {
      std::vector<std::string> objects;
      for (size_t i = 0; i < polys.size(); ++i) {
        objects.push_back(schur::jury_json(polys[i], tables[i]));
      }
      text = join_json_array(objects);
    }
  } else {
    std::ostringstream os;
    for (size_t i = 0; i < polys.size(); ++i) {
      if (i > 0) os << '\n';
      os << (format == "csv" ? schur::jury_table_csv(tables[i])
                             : schur::jury_table_text(tables[i]));
    }
    text = os.str();
  }
  write_output(oopts, text);

  for (const schur::JuryTable& t : tables) {
    if (t.verdict != schur::JuryVerdict::Stable) return jury_exit_code(t.verdict);
  }
  return 0;
}

int circle_exit_code(schur::CircleClass c) {
  switch (c) {
    case schur::CircleClass::Inside:
      return 0;
    case schur::CircleClass::Outside:
      return 1;
    case schur::CircleClass::NearCircle:
      return 3;
  }
  return kInternalError;
}

int run_roots_cmd(const PolyOpts& popts, const OutputOpts& oopts, const std::string& format,
                  unsigned long seed, double margin) {
  if (margin <= 0) throw UsageError("--margin must be positive");
  const Backend backend = parse_backend(popts.backend);
  const std::vector<MonicPolynomial> polys = gather_polys(popts, backend);
  schur::RootFinderOptions ropts;
  ropts.seed = seed;

  std::vector<std::string> objects;
  std::vector<schur::CircleClass> classes;
  std::ostringstream table;
  for (size_t i = 0; i < polys.size(); ++i) {
    const schur::RootSet rs = schur::find_roots(polys[i], ropts);
    schur::CircleClass cls = schur::CircleClass::NearCircle;
    if (rs.max_modulus < 1.0 - margin) cls = schur::CircleClass::Inside;
    if (rs.max_modulus > 1.0 + margin) cls = schur::CircleClass::Outside;
    classes.push_back(cls);
    if (format == "json") {
      objects.push_back(schur::roots_json(polys[i], rs, cls));
    } else {
      if (i > 0) table << '\n';
      table << polys[i].str() << '\n';
      for (const std::complex<double>& z : rs.roots) {
        table << "  " << z.real() << (z.imag() < 0 ? " - " : " + ")
              << std::abs(z.imag()) << "i  |.| = " << std::abs(z) << '\n';
      }
      table << "max modulus " << rs.max_modulus << "  class "
            << schur::circle_class_name(cls) << '\n';
    }
  }
  write_output(oopts, format == "json"
                          ? (objects.size() == 1 ? objects[0] : join_json_array(objects))
                          : table.str());

  for (schur::CircleClass cls : classes) {
    if (cls != schur::CircleClass::Inside) return circle_exit_code(cls);
  }
  return 0;
}

struct RegionFlags {
  std::string map = "quadratic-alpha-beta";
  std::string xmin = "-2.5", xmax = "2.5";
  std::string ymin = "-1.5", ymax = "1.5";
  int xsteps = 250, ysteps = 150;
  std::string backend = "exact";
  int max_stages = 3;
  double boundary_eps = 1e-9;
  std::string r = "1";
  std::string slice = "0";
  int threads = 1;
};

std::pair<std::string, std::string> axis_names(const std::string& mapping) {
  if (mapping == "quadratic-alpha-beta") return {"alpha", "beta"};
  if (mapping == "ricker-ba") return {"b", "a"};
  return {"a1", "a0"};
}

int run_region_cmd(const RegionFlags& flags, const OutputOpts& oopts, std::string format) {
  schur::GridSpec spec;
  const auto [xname, yname] = axis_names(flags.map);
  spec.mapping = flags.map;
  spec.x_axis = {xname, schur::Rational::parse(flags.xmin), schur::Rational::parse(flags.xmax),
                 flags.xsteps};
  spec.y_axis = {yname, schur::Rational::parse(flags.ymin), schur::Rational::parse(flags.ymax),
                 flags.ysteps};
  spec.backend = parse_backend(flags.backend);
  spec.max_stages = flags.max_stages;
  spec.float_boundary_epsilon = flags.boundary_eps;
  spec.r = schur::Rational::parse(flags.r);
  spec.slice = schur::Rational::parse(flags.slice);
  spec.threads = flags.threads;

  if (format.empty()) {
    // Infer from the output extension, defaulting to CSV.
    format = "csv";
    const size_t dot = oopts.out.rfind('.');
    if (dot != std::string::npos) {
      const std::string ext = oopts.out.substr(dot + 1);
      if (ext == "pgm" || ext == "ppm" || ext == "json" || ext == "csv") format = ext;
    }
  }

  const schur::RegionGrid grid = schur::scan_region(spec);
  if (format == "json") {
    write_output(oopts, schur::region_summary_json(grid));
  } else if (format == "csv") {
    std::ostringstream os;
    schur::write_region_csv(grid, os);
    write_output(oopts, os.str());
  } else if (format == "pgm") {
    std::ostringstream os;
    schur::write_region_pgm(grid, os);
    write_output(oopts, os.str(), /*binary=*/true);
  } else {
    std::ostringstream os;
    schur::write_region_ppm(grid, os);
    write_output(oopts, os.str(), /*binary=*/true);
  }
  return 0;
}

int run_cournot_cmd(const std::string& lambda, int k, int competitors, int max_stages,
                    const OutputOpts& oopts) {
  schur::CournotParams prm;
  prm.lambda = schur::parse_scalar(lambda, Backend::exact);
  prm.k = k;
  prm.competitors = competitors;
  schur::AlgoConfig cfg;
  cfg.max_stages = std::max(max_stages, k);
  const schur::CournotReport report = schur::cournot_verify(prm, cfg);
  write_output(oopts, schur::cournot_json(report));
  for (const schur::Certificate& cert : report.certificates) {
    if (cert.verdict != schur::Verdict::Certified) return schur::verdict_exit_code(cert.verdict);
  }
  return 0;
}

int ricker_exit_code(schur::RickerStatus status) {
  switch (status) {
    case schur::RickerStatus::StableSufficient:
      return 0;
    case schur::RickerStatus::UnstableNecessary:
      return 1;
    case schur::RickerStatus::Unknown:
      return 2;
  }
  return kInternalError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur stability via the modulated l1 test, with Jury and root-oracle checks"};
  app.require_subcommand(1);

  // check / trace
  PolyOpts check_p, trace_p, jury_p, roots_p;
  OutputOpts check_o, trace_o, jury_o, roots_o;
  std::string check_fmt = "json", trace_fmt = "table", jury_fmt = "table", roots_fmt = "json";
  int check_stages = 64, trace_stages = 64;
  double check_eps = 1e-9, trace_eps = 1e-9;
  unsigned long roots_seed = 0;
  double roots_margin = 1e-7;

  const auto add_poly_opts = [](CLI::App* sub, PolyOpts& p, OutputOpts& o) {
    // Coefficients arrive as unmatched tokens so that negative ones
    // ("-1/2") keep their command-line position; see fold_extras below.
    sub->allow_extras();
    sub->footer("Coefficients are listed inline, descending degree, leading included.");
    sub->add_option("--file", p.file, "file with one polynomial per line, # comments");
    sub->add_option("--backend", p.backend, "exact|float")->capture_default_str();
    sub->add_flag("--ascending", p.ascending, "coefficients are ascending instead");
    sub->add_option("--out", o.out, "write output to this path instead of stdout");
  };

  CLI::App* check = app.add_subcommand("check", "run the stability algorithm, emit a certificate");
  add_poly_opts(check, check_p, check_o);
  check->add_option("--max-stages,--stages", check_stages)->capture_default_str();
  check->add_option("--boundary-eps", check_eps, "float backend boundary width")
      ->capture_default_str();
  check->add_option("--format", check_fmt)->check(CLI::IsMember({"json", "table"}));

  CLI::App* trace = app.add_subcommand("trace", "print the stage-by-stage substitution table");
  add_poly_opts(trace, trace_p, trace_o);
  trace->add_option("--max-stages,--stages", trace_stages)->capture_default_str();
  trace->add_option("--boundary-eps", trace_eps)->capture_default_str();
  trace->add_option("--format", trace_fmt)->check(CLI::IsMember({"json", "table"}));

  CLI::App* jury = app.add_subcommand("jury", "classical Jury array and verdict");
  add_poly_opts(jury, jury_p, jury_o);
  jury->add_option("--format", jury_fmt)->check(CLI::IsMember({"json", "table", "csv"}));

  CLI::App* roots = app.add_subcommand("roots", "numerical roots and unit-circle class");
  add_poly_opts(roots, roots_p, roots_o);
  roots->add_option("--seed", roots_seed, "initial-guess rotation seed")->capture_default_str();
  roots->add_option("--margin", roots_margin, "NearCircle half-width")->capture_default_str();
  roots->add_option("--format", roots_fmt)->check(CLI::IsMember({"json", "table"}));

  RegionFlags region_f;
  OutputOpts region_o;
  std::string region_fmt;
  CLI::App* region = app.add_subcommand("region", "scan a parameter plane into stage classes");
  region->add_option("--map", region_f.map)
      ->check(CLI::IsMember({"quadratic-alpha-beta", "ricker-ba", "coeffs-n2", "coeffs-n3"}))
      ->capture_default_str();
  region->add_option("--xmin", region_f.xmin)->capture_default_str();
  region->add_option("--xmax", region_f.xmax)->capture_default_str();
  region->add_option("--xsteps", region_f.xsteps)->capture_default_str();
  region->add_option("--ymin", region_f.ymin)->capture_default_str();
  region->add_option("--ymax", region_f.ymax)->capture_default_str();
  region->add_option("--ysteps", region_f.ysteps)->capture_default_str();
  region->add_option("--backend", region_f.backend)->capture_default_str();
  region->add_option("--max-stages,--stages", region_f.max_stages)->capture_default_str();
  region->add_option("--boundary-eps", region_f.boundary_eps)->capture_default_str();
  region->add_option("--r", region_f.r, "ricker-ba growth parameter")->capture_default_str();
  region->add_option("--slice", region_f.slice, "coeffs-n3 fixed a2")->capture_default_str();
  region->add_option("--threads", region_f.threads)->capture_default_str();
  region->add_option("--format", region_fmt)
      ->check(CLI::IsMember({"csv", "json", "pgm", "ppm"}));
  region->add_option("--out", region_o.out);

  std::string cournot_lambda;
  int cournot_k = 1, cournot_n = 2, cournot_stages = 64;
  OutputOpts cournot_o;
  CLI::App* cournot = app.add_subcommand("cournot", "lagged oligopoly case study");
  cournot->add_option("--lambda", cournot_lambda, "adjustment rate in (0,1)")->required();
  cournot->add_option("--k", cournot_k, "lag")->capture_default_str();
  cournot->add_option("--competitors", cournot_n, "2 or 3")->capture_default_str();
  cournot->add_option("--max-stages,--stages", cournot_stages)->capture_default_str();
  cournot->add_option("--out", cournot_o.out);

  std::string ricker_r = "1", ricker_a, ricker_b;
  int ricker_stages = 1;
  bool ricker_scan = false;
  RegionFlags ricker_f;
  ricker_f.xmin = "0";
  ricker_f.xmax = "3";
  ricker_f.xsteps = 120;
  ricker_f.ymin = "0";
  ricker_f.ymax = "3";
  ricker_f.ysteps = 120;
  OutputOpts ricker_o;
  std::string ricker_fmt;
  CLI::App* ricker = app.add_subcommand("ricker", "three-species competition case study");
  ricker->add_option("--r", ricker_r, "growth parameter")->capture_default_str();
  ricker->add_option("--a", ricker_a, "aggregate parameter a");
  ricker->add_option("--b", ricker_b, "aggregate parameter b");
  ricker->add_flag("--scan-ba", ricker_scan, "scan the (b,a) plane instead of one point");
  ricker->add_option("--max-stages,--stages", ricker_stages)->capture_default_str();
  ricker->add_option("--xmin", ricker_f.xmin)->capture_default_str();
  ricker->add_option("--xmax", ricker_f.xmax)->capture_default_str();
  ricker->add_option("--xsteps", ricker_f.xsteps)->capture_default_str();
  ricker->add_option("--ymin", ricker_f.ymin)->capture_default_str();
  ricker->add_option("--ymax", ricker_f.ymax)->capture_default_str();
  ricker->add_option("--ysteps", ricker_f.ysteps)->capture_default_str();
  ricker->add_option("--backend", ricker_f.backend)->capture_default_str();
  ricker->add_option("--threads", ricker_f.threads)->capture_default_str();
  ricker->add_option("--format", ricker_fmt)
      ->check(CLI::IsMember({"csv", "json", "pgm", "ppm"}));
  ricker->add_option("--out", ricker_o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    const auto fold_extras = [](CLI::App* sub, PolyOpts& p) {
      // remaining() holds every token no registered option consumed, in
      // command-line order; those are the coefficients.
      std::vector<std::string> extras = sub->remaining();
      for (std::string& tok : extras) p.coeffs.push_back(std::move(tok));
    };
    if (check->parsed()) {
      fold_extras(check, check_p);
      schur::AlgoConfig cfg;
      cfg.max_stages = check_stages;
      cfg.float_boundary_epsilon = check_eps;
      return run_engine_cmd(check_p, check_o, cfg, check_fmt);
    }
    if (trace->parsed()) {
      fold_extras(trace, trace_p);
      schur::AlgoConfig cfg;
      cfg.max_stages = trace_stages;
      cfg.float_boundary_epsilon = trace_eps;
      return run_engine_cmd(trace_p, trace_o, cfg, trace_fmt);
    }
    if (jury->parsed()) {
      fold_extras(jury, jury_p);
      return run_jury_cmd(jury_p, jury_o, jury_fmt);
    }
    if (roots->parsed()) {
      fold_extras(roots, roots_p);
      return run_roots_cmd(roots_p, roots_o, roots_fmt, roots_seed, roots_margin);
    }
    if (region->parsed()) {
      return run_region_cmd(region_f, region_o, region_fmt);
    }
    if (cournot->parsed()) {
      return run_cournot_cmd(cournot_lambda, cournot_k, cournot_n, cournot_stages, cournot_o);
    }
    if (ricker->parsed()) {
      if (ricker_scan) {
        ricker_f.map = "ricker-ba";
        ricker_f.r = ricker_r;
        ricker_f.max_stages = ricker_stages;
        return run_region_cmd(ricker_f, ricker_o, ricker_fmt);
      }
      if (ricker_a.empty() || ricker_b.empty()) {
        throw UsageError("point mode needs --a and --b (or use --scan-ba)");
      }
      schur::RickerParams prm;
      prm.r = schur::parse_scalar(ricker_r, Backend::exact);
      prm.a = schur::parse_scalar(ricker_a, Backend::exact);
      prm.b = schur::parse_scalar(ricker_b, Backend::exact);
      schur::AlgoConfig cfg;
      cfg.max_stages = ricker_stages;
      const schur::RickerVerdict verdict = schur::ricker_verdict(prm, cfg);
      write_output(ricker_o, schur::ricker_json(prm, verdict));
      return ricker_exit_code(verdict.status);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const schur::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const schur::backend_mismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const schur::no_convergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}
