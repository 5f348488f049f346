// ptds: sample, verify and analyse nonlocal Davey-Stewartson rational solutions.
//
//   ptds catalog [--out DIR]
//   ptds sample --config FILE [--out DIR] [--time T]... [--grid NX,NY] [--box X0,X1,Y0,Y1] [--png] [--seed-check]
//   ptds verify --config FILE [--out DIR] [--time T]... [--box ...] [--h H]
//   ptds singularity --config FILE [--out DIR] [--numeric]
//
// Exit codes: 0 ok, 2 configuration error, 3 degenerate output, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "field_dump.hpp"
#include "heatmap.hpp"
#include "json.hpp"
#include "ptds/singularity.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ptds;
using namespace ptds::cli;

namespace {

enum Exit { ok = 0, config_error = 2, degenerate = 3, verification_failed = 4 };

struct Options {
  std::string config, out = ".";
  std::vector<double> times;
  std::string grid, box;
  double h = 0;
  bool png = false, seed_check = false, numeric = false;
};

std::vector<double> split_numbers(const std::string& s, std::size_t n, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string(what) + ": cannot read \"" + item + "\"");
    }
  }
  if (v.size() != n) throw ConfigError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  return v;
}

RunConfig configure(const Options& o) {
  RunConfig rc = load_config(o.config);
  if (!o.times.empty()) rc.times = o.times;
  if (!o.grid.empty()) {
    const auto g = split_numbers(o.grid, 2, "--grid");
    if (g[0] < 1 || g[1] < 1 || g[0] != std::floor(g[0]) || g[1] != std::floor(g[1]))
      throw ConfigError("--grid needs two positive integers");
    rc.nx = int(g[0]);
    rc.ny = int(g[1]);
  }
  if (!o.box.empty()) {
    const auto b = split_numbers(o.box, 4, "--box");
    if (!(b[1] > b[0]) || !(b[3] > b[2])) throw ConfigError("--box is empty");
    rc.box = {b[0], b[1], b[2], b[3]};
  }
  if (o.h > 0) rc.h = o.h;
  return rc;
}

std::vector<double> axis(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
  return v;
}

// Stable, locale-free file stem for a time value.
std::string time_tag(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "t%+.6g", t);
  return buf;
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream f(p);
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

int cmd_catalog(const Options& o) {
  json all = json::array();
  for (auto id : all_families()) {
    const auto& info = family_info(id);
    std::printf("%-18s %s  params: ", info.name.c_str(), info.equation.c_str());
    for (const auto& s : info.schema) std::printf("%s ", s.c_str());
    std::printf(" variants:");
    for (const auto& v : info.variants) std::printf(" %s", v.c_str());
    std::printf("%s%s\n", info.has_w ? "  [prints w]" : "", info.dt_backed ? "  [dt-backed]" : "");
    all.push_back({{"name", info.name},
                   {"equation", info.equation},
                   {"schema", info.schema},
                   {"variants", info.variants},
                   {"has_w", info.has_w},
                   {"dt_backed", info.dt_backed},
                   {"rogue", info.rogue},
                   {"nonlocal", info.nonlocal},
                   {"notes", info.notes}});
  }
  if (o.out != ".") {
    fs::create_directories(o.out);
    write_json(fs::path(o.out) / "catalog.json", all);
  }
  return ok;
}

int cmd_sample(const Options& o) {
  const RunConfig rc = configure(o);
  fs::create_directories(o.out);
  const auto xs = axis(rc.box.xmin, rc.box.xmax, rc.nx), ys = axis(rc.box.ymin, rc.box.ymax, rc.ny);
  json summary = json::array();
  int status = ok;
  for (double t : rc.times) {
    const auto s = sample_grid(rc.solution, xs, ys, t);
    const fs::path csv = fs::path(o.out) / (rc.name + "_" + time_tag(t) + ".csv");
    write_csv(csv, xs, ys, s);
    std::size_t flagged = 0;
    double max_u = 0;
    bool seed_ok = true;
    const double w0 = rc.globals.epsilon * rc.globals.rho * rc.globals.rho;
    for (const Sample& v : s) {
      flagged += v.flag == Flag::singular;
      if (v.flag == Flag::regular && std::isfinite(std::abs(v.u))) max_u = std::max(max_u, std::abs(v.u));
      seed_ok = seed_ok && v.flag == Flag::regular && v.u == cplx(rc.globals.rho) && v.w == cplx(w0);
    }
    if (o.png) write_heatmap((fs::path(o.out) / (rc.name + "_" + time_tag(t) + ".png")).string(), s, rc.nx, rc.ny,
                             rc.png_ceiling);
    summary.push_back({{"t", t},
                       {"csv", csv.filename().string()},
                       {"rows", s.size()},
                       {"singular", flagged},
                       {"max_abs_u", max_u}});
    std::printf("t=%g: %zu rows, %zu singular, max |u| %.6g -> %s\n", t, s.size(), flagged, max_u,
                csv.string().c_str());
    if (flagged == s.size()) {
      std::fprintf(stderr, "t=%g: every sample is singular\n", t);
      status = degenerate;
    }
    if (o.seed_check && !seed_ok) {
      std::fprintf(stderr, "seed check failed at t=%g\n", t);
      status = status == ok ? verification_failed : status;
    }
  }
  write_json(fs::path(o.out) / (rc.name + "_sample.json"), {{"source", rc.source}, {"times", summary}});
  return status;
}

int cmd_verify(const Options& o) {
  const RunConfig rc = configure(o);
  fs::create_directories(o.out);
  json reports = json::array();
  bool all_ok = true;
  for (double t : rc.times) {
    const auto c = convergence_order(rc.solution, rc.globals, rc.box, t, rc.h);
    const bool pass = c.passed();
    all_ok = all_ok && pass;
    reports.push_back({{"t", t},
                       {"h", rc.h},
                       {"max_residual_eq1", c.fine.max_eq1},
                       {"max_residual_eq2", c.fine.max_eq2},
                       {"max_residual_eq1_coarse", c.coarse.max_eq1},
                       {"max_residual_eq2_coarse", c.coarse.max_eq2},
                       {"order", nullable(c.order)},
                       {"order_eq1", nullable(c.order_eq1)},
                       {"order_eq2", nullable(c.order_eq2)},
                       {"floor", c.floor},
                       {"masked_fraction", c.fine.masked_fraction()},
                       {"passed", pass}});
    std::printf("t=%g: residual eq1 %.3e eq2 %.3e, order %.3f%s, masked %.3f -> %s\n", t, c.fine.max_eq1,
                c.fine.max_eq2, c.order, c.floor ? " (floor)" : "", c.fine.masked_fraction(), pass ? "PASS" : "FAIL");
  }
  write_json(fs::path(o.out) / (rc.name + "_verify.json"), {{"source", rc.source}, {"reports", reports}});
  return all_ok ? ok : verification_failed;
}

json conic_json(const Conic& c) {
  return {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", c.d}, {"e", c.e}, {"f", c.f}, {"type", c.type()}};
}

int cmd_singularity(const Options& o) {
  const RunConfig rc = configure(o);
  if (!rc.family) throw ConfigError("singularity analysis needs a catalog family");
  const SingularityReport rep = family_singularity(*rc.family, rc.params);
  json j{{"family", rc.source}, {"kind", kind_name(rep.kind)}, {"notes", rep.notes}};
  j["t_c"] = rep.t_c ? json(*rep.t_c) : json(nullptr);
  j["interval"] = rep.interval ? json(*rep.interval) : json(nullptr);
  if (rep.locus) j["locus"] = conic_json(*rep.locus);
  std::printf("%s: kind %s", rc.source.c_str(), kind_name(rep.kind).c_str());
  if (rep.t_c) std::printf(", t_c = %.10g", *rep.t_c);
  if (rep.interval) std::printf(", interval [%.7f, %.7f]", (*rep.interval)[0], (*rep.interval)[1]);
  std::printf("\n");

  if (o.numeric) {
    json num;
    if (rep.t_c) {
      const double tn = numeric_critical_time(rc.solution, *rep.t_c - 0.5, *rep.t_c + 0.5, rc.box);
      num["t_c"] = tn;
      num["t_c_difference"] = tn - *rep.t_c;
      if (rep.locus) {
        const auto z = locate_blowup(rc.solution, *rep.t_c, rc.box);
        double worst = 0;
        for (const auto& b : z) worst = std::max(worst, std::abs((*rep.locus)(b.x, b.y)));
        num["zeros"] = z.size();
        num["max_conic_residual"] = worst;
      }
      std::printf("numeric t_c = %.10g\n", tn);
    }
    if (rep.interval) {
      const auto& I = *rep.interval;
      const double pad = 0.25 * (I[1] - I[0]) + 0.1;
      const auto In = numeric_singular_interval(rc.solution, I[0] - pad, I[1] + pad, rc.box, 120);
      num["interval"] = In ? json(*In) : json(nullptr);
      if (In) std::printf("numeric interval [%.7f, %.7f]\n", (*In)[0], (*In)[1]);
    }
    j["numeric"] = num;
  }
  fs::create_directories(o.out);
  write_json(fs::path(o.out) / (rc.name + "_singularity.json"), j);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational solutions of the partially PT-symmetric nonlocal Davey-Stewartson system"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* c, bool needs_config) {
    auto* opt = c->add_option("--config", o.config, "JSON run configuration");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    c->add_option("--out", o.out, "output directory");
  };
  auto* cat = app.add_subcommand("catalog", "list the solution families");
  add_common(cat, false);
  auto* sample = app.add_subcommand("sample", "sample u and w on a grid, one CSV per time");
  add_common(sample, true);
  auto* verify = app.add_subcommand("verify", "finite-difference residual and convergence order");
  verify->set_help_flag("--help", "Print this help message and exit");  // frees -h/--h for the spacing
  add_common(verify, true);
  auto* sing = app.add_subcommand("singularity", "critical times, intervals and blow-up loci");
  add_common(sing, true);
  for (auto* c : {sample, verify, sing}) {
    c->add_option("--time", o.times, "time (repeatable)")->allow_extra_args(false);
    c->add_option("--box", o.box, "XMIN,XMAX,YMIN,YMAX");
  }
  sample->add_option("--grid", o.grid, "NX,NY");
  sample->add_flag("--png", o.png, "also write a |u| heatmap");
  sample->add_flag("--seed-check", o.seed_check, "require u = rho, w = eps rho^2, all flags 0");
  verify->add_option("--h", o.h, "grid spacing (halved for the order estimate)");
  sing->add_flag("--numeric", o.numeric, "cross-check against the numeric zero search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config_error;
  }

  try {
    if (*cat) return cmd_catalog(o);
    if (*sample) return cmd_sample(o);
    if (*verify) return cmd_verify(o);
    return cmd_singularity(o);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return config_error;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return config_error;
  } catch (const SingularPointError& e) {
    std::fprintf(stderr, "degenerate: %s\n", e.what());
    return degenerate;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
