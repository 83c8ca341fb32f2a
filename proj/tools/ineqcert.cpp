// ineqcert: command-line front end for the inequality certification engine.
//
// Subcommands:
//   identities  verify the algebraic proof-step ledger, emit a JSON report
//   certify     run the branch-and-bound certifier, emit Certificate JSON
//   critical    multistart Newton probe of the stationarity system, CSV
//   scan        double-precision grid scan (cross-check oracle), CSV
//
// Exit codes: 0 success, 1 failure, 2 partial (epsilon-grade), 64 usage.
// Configuration precedence: flags > key=value config file (--config) >
// built-in defaults. Worker count also honors $INEQCERT_WORKERS.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ineqcert/certifier.hpp"
#include "ineqcert/critical.hpp"
#include "ineqcert/identities.hpp"
#include "ineqcert/scalar.hpp"

using json = nlohmann::ordered_json;
using namespace ineqcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

bool write_text(const std::string& path, const std::string& text, std::string* err) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    *err = "cannot write " + path;
    return false;
  }
  return true;
}

Mode parse_mode(const std::string& s) { return s == "hyp" ? Mode::hyp : Mode::trig; }

// Plain key=value configuration file ('#' comments, blank lines ignored).
// Precedence: command-line flags > file values > built-in defaults.
class KeyValueConfig {
 public:
  KeyValueConfig(CLI::App* cmd, const std::string& path) : cmd_(cmd) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      size_t eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      std::string key = trim(line.substr(0, eq));
      std::string val = trim(line.substr(eq + 1));
      if (!key.empty()) values_[key] = val;
    }
  }

  template <typename T>
  void apply(const std::string& key, T* target) const {
    auto it = values_.find(key);
    if (it == values_.end()) return;
    if (cmd_->count("--" + key) > 0) return;  // explicit flag wins
    std::istringstream ss(it->second);
    T parsed;
    if (ss >> parsed) *target = parsed;
  }

 private:
  CLI::App* cmd_;
  std::map<std::string, std::string> values_;
};

// ---------------------------------------------------------------- identities

struct IdentitiesOpts {
  std::string mode = "both";
  std::string step;
  std::string out;
  std::string config;
  bool tamper = false;  // negative-control hook: flip one claim coefficient
};

json step_to_json(const StepResult& s) {
  json j;
  j["id"] = s.id;
  j["lemma"] = s.lemma == Mode::trig ? "trig" : "hyp";
  j["method"] = method_name(s.method);
  j["description"] = s.description;
  j["passed"] = s.passed;
  j["side_conditions"] = s.side_conditions;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

int cmd_identities(IdentitiesOpts o, CLI::App* cmd) {
  KeyValueConfig file(cmd, o.config);
  file.apply("mode", &o.mode);
  file.apply("step", &o.step);
  file.apply("out", &o.out);

  json report;
  report["tool"] = "ineqcert identities";
  report["version"] = kVersion;
  bool all_passed = true;
  std::vector<std::string> failed_ids;

  if (!o.step.empty()) {
    Mode m = o.step.empty() || o.step[0] == 'F' ? Mode::hyp : Mode::trig;
    StepResult r = o.tamper ? detail::verify_step_tampered(m, o.step)
                            : verify_step(m, o.step);
    report["steps"] = json::array({step_to_json(r)});
    all_passed = r.passed;
    if (!r.passed) failed_ids.push_back(r.id);
  } else {
    std::vector<Mode> modes;
    if (o.mode == "both") {
      modes = {Mode::trig, Mode::hyp};
    } else {
      modes = {parse_mode(o.mode)};
    }
    json steps = json::array();
    for (Mode m : modes) {
      for (const std::string& id : step_ids(m)) {
        StepResult r = o.tamper ? detail::verify_step_tampered(m, id)
                                : verify_step(m, id);
        steps.push_back(step_to_json(r));
        if (!r.passed) {
          all_passed = false;
          failed_ids.push_back(r.id);
        }
      }
      json axiom;
      axiom["mode"] = m == Mode::trig ? "trig" : "hyp";
      double res = reduction_axiom_residual(m);
      axiom["max_residual"] = res;
      axiom["threshold"] = 1e-30;
      axiom["passed"] = res <= 1e-30;
      report["reduction_axioms"].push_back(axiom);
      if (res > 1e-30) all_passed = false;
    }
    report["steps"] = std::move(steps);
    if (o.mode == "both" && !o.tamper) {
      MirrorReport mr = mirror_check();
      report["mirror_check"] = {{"passed", mr.passed},
                                {"negative_control_passed", mr.negative_control_passed},
                                {"detail", mr.detail}};
      if (!mr.passed || !mr.negative_control_passed) all_passed = false;
    }
  }
  report["all_passed"] = all_passed;
  report["generated_at"] = timestamp_utc();

  std::string err;
  if (!write_text(o.out, report.dump(2) + "\n", &err)) {
    std::cerr << "error: " << err << "\n";
    return kExitFail;
  }
  if (!all_passed) {
    std::cerr << "identities: FAILED steps:";
    for (const auto& id : failed_ids) std::cerr << " " << id;
    std::cerr << "\n";
    return kExitFail;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ certify

struct CertifyOpts {
  std::string lemma = "1";  // 1 | 2 | both
  double rho = std::nan("");
  double slice_width = std::nan("");
  double budget = std::nan("");
  int workers = 0;
  double offset = 0;
  std::string corner_policy;
  unsigned seed = 0;
  double t0 = std::nan(""), t1 = std::nan("");
  double u0 = std::nan(""), u1 = std::nan("");
  double v0 = std::nan(""), v1 = std::nan("");
  std::string out;
  std::string config;
};

json certificate_to_json(const Certificate& c) {
  json j;
  j["lemma"] = c.lemma;
  j["mode"] = c.mode == Mode::trig ? "trig" : "hyp";
  j["status"] = status_name(c.status);
  j["region_status"] = status_name(c.region_status);
  j["delta"] = c.delta;
  j["region"] = {{"t0", c.region.t0}, {"t1", c.region.t1},
                 {"u0", c.region.u0}, {"u1", c.region.u1},
                 {"v0", c.region.v0}, {"v1", c.region.v1}};
  j["tube"] = {{"rho", c.tube.rho}, {"slice_width", c.tube.slice_width}};
  j["corner_policy"] = c.corner_policy;
  j["epsilon"] = c.epsilon;
  j["stats"] = {{"boxes", c.stats.boxes},
                {"max_depth", c.stats.max_depth},
                {"slices", c.stats.slices},
                {"fallback_slices", c.stats.fallback_slices},
                {"corner_samples", c.stats.corner_samples}};
  j["residual_boxes"] = c.residual_boxes;
  j["rounding"] = c.rounding;
  j["version"] = c.version;
  // Timing and timestamp are informational; determinism claims exclude them.
  j["wall_seconds"] = c.stats.wall_seconds;
  j["generated_at"] = timestamp_utc();
  return j;
}

int status_exit_code(CertStatus s) {
  switch (s) {
    case CertStatus::proved_strict: return kExitOk;
    case CertStatus::proved_up_to_epsilon: return kExitPartial;
    default: return kExitFail;
  }
}

int cmd_certify(CertifyOpts o, CLI::App* cmd) {
  KeyValueConfig file(cmd, o.config);
  file.apply("lemma", &o.lemma);
  file.apply("rho", &o.rho);
  file.apply("slice-width", &o.slice_width);
  file.apply("budget", &o.budget);
  file.apply("workers", &o.workers);
  file.apply("offset", &o.offset);
  file.apply("corner-policy", &o.corner_policy);
  file.apply("seed", &o.seed);
  file.apply("t0", &o.t0);
  file.apply("t1", &o.t1);
  file.apply("u0", &o.u0);
  file.apply("u1", &o.u1);
  file.apply("v0", &o.v0);
  file.apply("v1", &o.v1);
  file.apply("out", &o.out);

  std::vector<int> lemmas;
  if (o.lemma == "both") {
    lemmas = {1, 2};
  } else if (o.lemma == "1" || o.lemma == "2") {
    lemmas = {std::stoi(o.lemma)};
  } else {
    std::cerr << "error: --lemma must be 1, 2 or both\n";
    return kExitUsage;
  }

  int worst = kExitOk;
  for (int lemma : lemmas) {
    Mode mode = lemma == 1 ? Mode::trig : Mode::hyp;
    CertifyConfig cfg = default_config(mode);
    if (!std::isnan(o.rho)) cfg.tube.rho = o.rho;
    if (!std::isnan(o.slice_width)) cfg.tube.slice_width = o.slice_width;
    if (!std::isnan(o.budget)) cfg.budget = static_cast<long>(o.budget);
    if (o.workers > 0) cfg.workers = o.workers;
    cfg.offset = o.offset;
    if (!o.corner_policy.empty()) cfg.corner_policy = o.corner_policy;
    if (o.seed != 0) cfg.seed = o.seed;
    if (!std::isnan(o.t0)) cfg.region.t0 = o.t0;
    if (!std::isnan(o.t1)) cfg.region.t1 = o.t1;
    if (!std::isnan(o.u0)) cfg.region.u0 = o.u0;
    if (!std::isnan(o.u1)) cfg.region.u1 = o.u1;
    if (!std::isnan(o.v0)) cfg.region.v0 = o.v0;
    if (!std::isnan(o.v1)) cfg.region.v1 = o.v1;
    if (cfg.tube.rho < 0 || cfg.budget < 1 || cfg.workers < 1 ||
        cfg.region.t1 <= cfg.region.t0) {
      std::cerr << "error: invalid certify configuration\n";
      return kExitUsage;
    }

    Certificate cert = certify_lemma(mode, cfg);
    std::string path = o.out;
    if (path.empty()) path = "certificate_lemma" + std::to_string(lemma) + ".json";
    if (lemmas.size() > 1 && !o.out.empty() && o.out != "-") {
      path = o.out + ".lemma" + std::to_string(lemma);
    }
    std::string err;
    if (!write_text(path, certificate_to_json(cert).dump(2) + "\n", &err)) {
      std::cerr << "error: " << err << "\n";
      return kExitFail;
    }
    std::cerr << "lemma " << lemma << ": " << status_name(cert.status)
              << " (region " << status_name(cert.region_status)
              << ", delta " << cert.delta << ", boxes " << cert.stats.boxes
              << ", " << cert.stats.wall_seconds << " s) -> " << path << "\n";
    worst = std::max(worst, status_exit_code(cert.status));
  }
  return worst;
}

// ----------------------------------------------------------------- critical

struct CriticalOpts {
  std::string mode = "trig";
  int starts = 1000;
  unsigned seed = 1;
  std::string out;
  std::string config;
};

int cmd_critical(CriticalOpts o, CLI::App* cmd) {
  KeyValueConfig file(cmd, o.config);
  file.apply("mode", &o.mode);
  file.apply("starts", &o.starts);
  file.apply("seed", &o.seed);
  file.apply("out", &o.out);

  Mode mode = parse_mode(o.mode);
  std::vector<EvalPoint> starts = quasi_random_starts(mode, o.starts, o.seed);

  std::string csv;
  csv += "index,start_t,start_x,start_y,converged,iterations,t,x,y,residual,"
         "classification,manifold_distance\n";
  char row[512];
  long spurious = 0;
  for (size_t i = 0; i < starts.size(); ++i) {
    StationaryPoint r = newton_stationary(mode, starts[i]);
    double dist = r.converged ? manifold_distance(r.point) : std::nan("");
    std::snprintf(row, sizeof row,
                  "%zu,%.17g,%.17g,%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g,%s,%.17g\n",
                  i, starts[i].t, starts[i].x, starts[i].y, r.converged ? 1 : 0,
                  r.iterations, r.point.t, r.point.x, r.point.y, r.residual,
                  point_class_name(r.classification), dist);
    csv += row;
    if (r.converged && r.classification == PointClass::spurious) ++spurious;
  }

  std::string err;
  if (!write_text(o.out, csv, &err)) {
    std::cerr << "error: " << err << "\n";
    return kExitFail;
  }
  for (const AlphaBetaState& s : solve_alpha_beta(mode)) {
    std::cerr << "branch " << s.branch << ": alpha=" << s.alpha
              << " beta=" << s.beta << " c=" << s.c
              << (s.consistent ? " (admissible)" : " (excluded)") << " — "
              << s.note << "\n";
  }
  if (spurious > 0) {
    std::cerr << "critical: " << spurious << " spurious convergent(s)\n";
    return kExitFail;
  }
  return kExitOk;
}

// --------------------------------------------------------------------- scan

struct ScanOpts {
  std::string mode = "trig";
  int grid = 100;
  double t0 = std::nan(""), t1 = std::nan("");
  double x0 = std::nan(""), x1 = std::nan("");
  double y0 = std::nan(""), y1 = std::nan("");
  std::string out;
  std::string config;
};

int cmd_scan(ScanOpts o, CLI::App* cmd) {
  KeyValueConfig file(cmd, o.config);
  file.apply("mode", &o.mode);
  file.apply("grid", &o.grid);
  file.apply("t0", &o.t0);
  file.apply("t1", &o.t1);
  file.apply("x0", &o.x0);
  file.apply("x1", &o.x1);
  file.apply("y0", &o.y0);
  file.apply("y1", &o.y1);
  file.apply("out", &o.out);

  if (o.grid < 2) {
    std::cerr << "error: --grid must be >= 2\n";
    return kExitUsage;
  }
  Mode mode = parse_mode(o.mode);
  ScanBox box = mode == Mode::trig
                    ? ScanBox{0.2, 3.14, 0.0, 10.0, 0.0, 10.0}
                    : ScanBox{0.2, 6.0, 1.05, 10.0, 1.05, 10.0};
  if (!std::isnan(o.t0)) box.t0 = o.t0;
  if (!std::isnan(o.t1)) box.t1 = o.t1;
  if (!std::isnan(o.x0)) box.x0 = o.x0;
  if (!std::isnan(o.x1)) box.x1 = o.x1;
  if (!std::isnan(o.y0)) box.y0 = o.y0;
  if (!std::isnan(o.y1)) box.y1 = o.y1;
  if (box.t1 <= box.t0 || box.x1 <= box.x0 || box.y1 <= box.y0) {
    std::cerr << "error: empty scan box\n";
    return kExitUsage;
  }

  const int n = o.grid;
  auto coord = [n](double lo, double hi, int i) {
    return lo + (hi - lo) * i / (n - 1);
  };
  std::string csv;
  csv.reserve(64u * n * n * n + 64);
  csv += "t,x,y,value\n";
  double min_val = std::numeric_limits<double>::infinity();
  EvalPoint argmin;
  char row[160];
  for (int it = 0; it < n; ++it) {
    double t = coord(box.t0, box.t1, it);
    for (int ix = 0; ix < n; ++ix) {
      double x = coord(box.x0, box.x1, ix);
      for (int iy = 0; iy < n; ++iy) {
        double y = coord(box.y0, box.y1, iy);
        EvalPoint p{mode, t, x, y};
        double v = (mode == Mode::trig ? eval_G(p) : eval_F(p)).value;
        std::snprintf(row, sizeof row, "%.17g,%.17g,%.17g,%.17g\n", t, x, y, v);
        csv += row;
        if (v < min_val) {
          min_val = v;
          argmin = p;
        }
      }
    }
  }

  std::string err;
  if (!write_text(o.out, csv, &err)) {
    std::cerr << "error: " << err << "\n";
    return kExitFail;
  }
  std::cerr << "scan: min " << min_val << " at t=" << argmin.t
            << " x=" << argmin.x << " y=" << argmin.y << "\n";
  return min_val >= -1e-9 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certification engine for two three-variable analytic inequalities"};
  app.require_subcommand(1);

  IdentitiesOpts id_opts;
  CLI::App* id_cmd =
      app.add_subcommand("identities", "Verify the algebraic proof-step ledger");
  id_cmd->add_option("--mode", id_opts.mode, "trig | hyp | both")
      ->check(CLI::IsMember({"trig", "hyp", "both"}))
      ->capture_default_str();
  id_cmd->add_option("--step", id_opts.step, "Verify a single step by id");
  id_cmd->add_option("--out", id_opts.out, "JSON report path (default stdout)");
  id_cmd->add_flag("--tamper", id_opts.tamper,
                   "Negative control: mutate each claim before checking")
      ->group("");
  id_cmd->add_option("--config", id_opts.config, "key=value configuration file");

  CertifyOpts ct_opts;
  CLI::App* ct_cmd =
      app.add_subcommand("certify", "Run the branch-and-bound certifier");
  ct_cmd->add_option("--lemma", ct_opts.lemma, "1 | 2 | both")->capture_default_str();
  ct_cmd->add_option("--rho", ct_opts.rho, "Tube half-width (compact coords)");
  ct_cmd->add_option("--slice-width", ct_opts.slice_width, "Tube slice t-width");
  ct_cmd->add_option("--budget", ct_opts.budget, "Max boxes processed");
  ct_cmd->add_option("--workers", ct_opts.workers, "Worker thread count")
      ->envname("INEQCERT_WORKERS");
  ct_cmd->add_option("--offset", ct_opts.offset,
                     "Certify objective + offset (negative = control)");
  ct_cmd->add_option("--corner-policy", ct_opts.corner_policy,
                     "trig corner handling: sample | exclude");
  ct_cmd->add_option("--seed", ct_opts.seed, "Quasi-random sampling seed");
  ct_cmd->add_option("--t0", ct_opts.t0, "Region override");
  ct_cmd->add_option("--t1", ct_opts.t1, "Region override");
  ct_cmd->add_option("--u0", ct_opts.u0, "Region override (compact x)");
  ct_cmd->add_option("--u1", ct_opts.u1, "Region override (compact x)");
  ct_cmd->add_option("--v0", ct_opts.v0, "Region override (compact y)");
  ct_cmd->add_option("--v1", ct_opts.v1, "Region override (compact y)");
  ct_cmd->add_option("--out", ct_opts.out,
                     "Certificate path (default certificate_lemmaN.json)");
  ct_cmd->add_option("--config", ct_opts.config, "key=value configuration file");

  CriticalOpts cr_opts;
  CLI::App* cr_cmd =
      app.add_subcommand("critical", "Multistart Newton probe of stationary points");
  cr_cmd->add_option("--mode", cr_opts.mode, "trig | hyp")
      ->check(CLI::IsMember({"trig", "hyp"}))
      ->capture_default_str();
  cr_cmd->add_option("--starts", cr_opts.starts, "Number of quasi-random starts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cr_cmd->add_option("--seed", cr_opts.seed, "Sequence seed")->capture_default_str();
  cr_cmd->add_option("--out", cr_opts.out, "CSV path (default stdout)");
  cr_cmd->add_option("--config", cr_opts.config, "key=value configuration file");

  ScanOpts sc_opts;
  CLI::App* sc_cmd =
      app.add_subcommand("scan", "Double-precision grid scan (cross-check oracle)");
  sc_cmd->add_option("--mode", sc_opts.mode, "trig | hyp")
      ->check(CLI::IsMember({"trig", "hyp"}))
      ->capture_default_str();
  sc_cmd->add_option("--grid", sc_opts.grid, "Points per axis (>= 2)")
      ->capture_default_str();
  sc_cmd->add_option("--t0", sc_opts.t0, "Box override");
  sc_cmd->add_option("--t1", sc_opts.t1, "Box override");
  sc_cmd->add_option("--x0", sc_opts.x0, "Box override");
  sc_cmd->add_option("--x1", sc_opts.x1, "Box override");
  sc_cmd->add_option("--y0", sc_opts.y0, "Box override");
  sc_cmd->add_option("--y1", sc_opts.y1, "Box override");
  sc_cmd->add_option("--out", sc_opts.out, "CSV path (default stdout)");
  sc_cmd->add_option("--config", sc_opts.config, "key=value configuration file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (id_cmd->parsed()) return cmd_identities(id_opts, id_cmd);
    if (ct_cmd->parsed()) return cmd_certify(ct_opts, ct_cmd);
    if (cr_cmd->parsed()) return cmd_critical(cr_opts, cr_cmd);
    if (sc_cmd->parsed()) return cmd_scan(sc_opts, sc_cmd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
