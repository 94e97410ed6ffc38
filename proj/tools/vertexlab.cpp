// Command-line front door: parameter ingestion, the computation commands, the
// self-test battery, and JSON/CSV emission for plotting.
//
// Exit codes: 0 success, 1 invariant failure, 2 domain error, 3 resonance or
// singularity.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vertexlab/errors.hpp"
#include "vertexlab/interp.hpp"
#include "vertexlab/jsonio.hpp"
#include "vertexlab/mellin.hpp"
#include "vertexlab/monodromy.hpp"
#include "vertexlab/reduction.hpp"
#include "vertexlab/selftest.hpp"
#include "vertexlab/stab.hpp"

namespace {

using vxl::cplx;
using vxl::json;

struct GlobalOpts {
  std::string config_path;
  std::string out_path;
  int threads = 0;
  std::uint64_t seed = 1;
  int k = 1;
  int n = 2;
};

json load_config(const GlobalOpts& g) {
  std::string path = g.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("VERTEXLAB_CONFIG")) path = env;
  }
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw vxl::DomainError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw vxl::DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  return j;
}

vxl::Params resolve_params(const GlobalOpts& g, const json& cfg) {
  if (cfg.contains("params")) return vxl::validate_params(vxl::params_from_json(cfg["params"]));
  return vxl::validate_params(vxl::admissible_point(g.seed, g.k, g.n));
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(g.out_path);
  if (!out) throw vxl::DomainError("cannot open output file: " + g.out_path);
  out << text;
}

std::vector<cplx> parse_x_list(const std::string& s) {
  std::vector<cplx> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) out.push_back(vxl::parse_complex(tok));
  return out;
}

vxl::FixedPoint parse_mu(const std::string& s) {
  vxl::FixedPoint fp;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) fp.mu.push_back(std::atoi(tok.c_str()));
  return fp;
}

vxl::Chamber parse_chamber(const std::string& s) {
  if (s == "plus" || s == "+") return vxl::Chamber::plus;
  if (s == "minus" || s == "-") return vxl::Chamber::minus;
  throw vxl::DomainError("chamber must be plus or minus");
}

json checks_to_json(const std::vector<vxl::CheckResult>& checks, bool* all_pass) {
  json arr = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
    ok = ok && c.pass;
  }
  if (all_pass) *all_pass = ok;
  return arr;
}

// ------------------------------------------------------------------ commands

int cmd_interp(const GlobalOpts& g, const json& cfg, const std::string& mode, int L,
               const std::string& xtxt) {
  const vxl::Params p = resolve_params(g, cfg);
  if (!cfg.contains("interp"))
    throw vxl::DomainError("interp command needs an \"interp\" config section with nodes/values");
  vxl::NodeData d;
  for (const auto& e : cfg["interp"].at("nodes")) d.nodes.push_back(vxl::complex_from_json(e));
  for (const auto& e : cfg["interp"].at("values")) d.values.push_back(vxl::complex_from_json(e));
  vxl::validate_nodes(d);
  const cplx x = vxl::parse_complex(xtxt);

  json out;
  out["mode"] = mode;
  cplx value;
  if (mode == "lagrange") {
    value = vxl::lagrange_eval(d, x);
  } else if (mode == "trig") {
    value = vxl::trig_interp_eval(d, L, x);
    out["L"] = L;
    out["newton_window_residual"] = vxl::newton_window_residual(d, L);
  } else if (mode == "elliptic") {
    value = vxl::elliptic_interp_eval(d, p.z, x, p);
    const auto flags = vxl::resonance_check(d, p.z, p);
    out["resonance"] = {{"z_resonant", flags.z_resonant}, {"node_pairs", flags.node_pairs}};
  } else {
    throw vxl::DomainError("mode must be lagrange, trig, or elliptic");
  }
  out["value"] = vxl::complex_to_json(value);

  json residuals = json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    cplx v;
    if (mode == "lagrange")
      v = vxl::lagrange_eval(d, d.nodes[i]);
    else if (mode == "trig")
      v = vxl::trig_interp_eval(d, L, d.nodes[i]);
    else
      v = vxl::elliptic_interp_eval(d, p.z, d.nodes[i], p);
    residuals.push_back(std::abs(v - d.values[i]) /
                        std::max(1e-300, std::abs(d.values[i])));
  }
  out["node_residuals"] = residuals;
  emit(g, out.dump(2));
  return 0;
}

int cmd_stab_eval(const GlobalOpts& g, const json& cfg, const std::string& mu_txt,
                  const std::string& chamber_txt, const std::string& x_txt) {
  const vxl::Params p = resolve_params(g, cfg);
  vxl::StabSpec spec{parse_mu(mu_txt), parse_chamber(chamber_txt), p};
  const auto x = parse_x_list(x_txt);
  if (static_cast<int>(x.size()) != p.k) throw vxl::DomainError("--x must list k values");
  const double diag = vxl::near_diagonal_distance(x, p);
  const cplx v = vxl::stab_envelope(spec, x);
  json out;
  out["value"] = vxl::complex_to_json(v);
  out["checks"] = {{"near_diagonal", diag < 1e-8}, {"diagonal_distance", diag}};
  emit(g, out.dump(2));
  return 0;
}

int cmd_stab_check(const GlobalOpts& g, const json& cfg) {
  const vxl::Params p = resolve_params(g, cfg);
  auto checks = vxl::check_stab(p, vxl::Chamber::plus, g.seed);
  auto minus = vxl::check_stab(p, vxl::Chamber::minus, g.seed);
  checks.insert(checks.end(), minus.begin(), minus.end());
  bool ok = true;
  json out;
  out["checks"] = checks_to_json(checks, &ok);
  out["pass"] = ok;
  emit(g, out.dump(2));
  return ok ? 0 : 1;
}

int cmd_stab_wheel(const GlobalOpts& g, const json& cfg, const std::string& mu_txt,
                   const std::string& chamber_txt, int l, int samples) {
  const vxl::Params p = resolve_params(g, cfg);
  vxl::StabSpec spec{parse_mu(mu_txt), parse_chamber(chamber_txt), p};
  const auto rep = vxl::wheel_check(spec, l, samples, g.seed);
  json out;
  out["max_on_locus"] = rep.max_on_locus;
  out["scale"] = rep.scale;
  out["residual"] = rep.scale > 0 ? rep.max_on_locus / rep.scale : 0.0;
  emit(g, out.dump(2));
  return 0;
}

int cmd_vertex(const GlobalOpts& g, const json& cfg, const std::string& mu_txt,
               const std::string& chamber_txt, const std::string& rho_txt, int D, int N,
               double z_max, bool unrestricted) {
  const vxl::Params p = resolve_params(g, cfg);
  vxl::StabSpec spec{mu_txt.empty() ? vxl::all_fixed_points(p.k, p.n).front() : parse_mu(mu_txt),
                     parse_chamber(chamber_txt), p};
  const auto rho = vxl::Descendent::named(rho_txt, p.k, p.n);

  const auto ledger = vxl::vertex_series(rho, spec, D, z_max);
  const cplx total = ledger.total();
  const cplx oracle = vxl::quadrature_oracle(rho, spec, N);
  const double rel_err =
      std::abs(total - oracle) / std::max(std::abs(oracle), 1e-300);

  json out;
  out["z"] = vxl::complex_to_json(p.z);
  json dl = json::array();
  for (const auto& c : ledger.contributions) dl.push_back(vxl::complex_to_json(c));
  out["degree_ledger"] = dl;
  out["total"] = vxl::complex_to_json(total);
  out["oracle"] = vxl::complex_to_json(oracle);
  out["rel_err"] = rel_err;

  json meta;
  meta["k"] = p.k;
  meta["n"] = p.n;
  meta["mu"] = spec.mu.mu;
  meta["chamber"] = vxl::chamber_name(spec.chamber);
  meta["rho"] = rho_txt;
  meta["D"] = D;
  meta["N"] = N;
  meta["decay_ratio"] = ledger.decay_ratio();
  meta["convergence_warning"] = ledger.convergence_warning;
  meta["assignments"] = vxl::enumerate_poles(p, D, false).size();
  if (unrestricted) {
    const auto all = vxl::enumerate_poles(p, D, true);
    vxl::ComplexSum towers;
    std::size_t count = 0;
    for (const auto& pa : all)
      if (!pa.simple_towers()) {
        towers.add(vxl::residue_at(rho, spec, pa));
        ++count;
      }
    meta["tower_assignments"] = count;
    meta["tower_sum"] = vxl::complex_to_json(towers.value());
    meta["tower_relative_size"] =
        std::abs(towers.value()) / std::max(std::abs(total), 1e-300);
  }
  out["meta"] = meta;
  emit(g, out.dump(2));
  return 0;
}

int cmd_monodromy(const GlobalOpts& g, const json& cfg, int grid) {
  const vxl::Params p = resolve_params(g, cfg);

  bool minus_ok = true;
  const auto minus_checks = vxl::check_stab(p, vxl::Chamber::minus, g.seed);
  json minus_json = checks_to_json(minus_checks, &minus_ok);
  if (!minus_ok)
    throw vxl::Error("minus-chamber construction failed its property suite; "
                     "monodromy output would be untrustworthy");

  const auto m = vxl::monodromy_matrix(p);
  const double per = vxl::monodromy_periodicity_residual(p);

  if (grid > 0) {
    // CSV of |M_ij| over a log-spaced |z| annulus at the phase of z
    std::ostringstream csv;
    csv << "z_re,z_im,row,col,abs,re,im\n";
    const double r0 = std::abs(p.z) * 0.5;
    const double r1 = std::abs(p.z) * 2.0;
    const double ph = std::arg(p.z);
    for (int t = 0; t < grid; ++t) {
      const double r = r0 * std::pow(r1 / r0, grid == 1 ? 0.0 : t / double(grid - 1));
      const cplx zt = std::polar(r, ph);
      const auto mt = vxl::monodromy_matrix(p.with_z(zt));
      for (std::size_t i = 0; i < mt.size(); ++i)
        for (std::size_t j = 0; j < mt.size(); ++j) {
          char line[200];
          std::snprintf(line, sizeof(line), "%.17g,%.17g,%zu,%zu,%.17g,%.17g,%.17g\n", zt.real(),
                        zt.imag(), i, j, std::abs(mt[i][j]), mt[i][j].real(), mt[i][j].imag());
          csv << line;
        }
    }
    emit(g, csv.str());
    return 0;
  }

  json out;
  json mj = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vxl::complex_to_json(v));
    mj.push_back(r);
  }
  out["M"] = mj;
  out["periodicity_residual"] = per;
  out["chamber_minus_checks"] = minus_json;
  emit(g, out.dump(2));
  return 0;
}

int cmd_selftest(const GlobalOpts& g, const json& cfg) {
  if (cfg.contains("params")) vxl::validate_params(vxl::params_from_json(cfg["params"]));
  bool ok = true;
  const std::string report = vxl::selftest_report(g.seed, &ok);
  emit(g, report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"numerical laboratory for theta-function interpolation, symmetric stable "
               "envelopes, Mellin-Barnes vertex integrals, and Kahler monodromy"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--config", g.config_path, "JSON config path (env VERTEXLAB_CONFIG as fallback)");
  app.add_option("--out", g.out_path, "output path (default stdout)");
  app.add_option("--threads", g.threads, "OpenMP thread count (0 = library default)");
  app.add_option("--seed", g.seed, "seed for sampled points");
  app.add_option("--k", g.k, "rank k when no params are configured");
  app.add_option("--n", g.n, "frame dimension n when no params are configured");

  auto* interp = app.add_subcommand("interp", "evaluate the interpolation formulas");
  std::string mode = "lagrange", xtxt = "0.3";
  int L = 0;
  interp->add_option("--mode", mode, "lagrange | trig | elliptic");
  interp->add_option("--L", L, "window offset for trig mode");
  interp->add_option("--x", xtxt, "evaluation point, e.g. 0.3+0.1i");

  auto* stab = app.add_subcommand("stab", "stable envelope evaluation and checks");
  stab->require_subcommand(1);
  std::string mu_txt = "1", chamber_txt = "plus", x_list;
  auto* stab_eval = stab->add_subcommand("eval", "evaluate the envelope at a point");
  stab_eval->add_option("--mu", mu_txt, "fixed point, e.g. 1,3");
  stab_eval->add_option("--chamber", chamber_txt, "plus | minus");
  stab_eval->add_option("--x", x_list, "semicolon-separated x values")->required();
  auto* stab_check = stab->add_subcommand("check", "run the envelope property battery");
  bool check_all_flag = false;
  stab_check->add_flag("--all", check_all_flag, "run every chamber (always on)");
  int wheel_l = 1, wheel_samples = 8;
  auto* stab_wheel = stab->add_subcommand("wheel", "sample the wheel locus");
  stab_wheel->add_option("--mu", mu_txt, "fixed point");
  stab_wheel->add_option("--chamber", chamber_txt, "plus | minus");
  stab_wheel->add_option("--l", wheel_l, "frame label of the wheel pair");
  stab_wheel->add_option("--samples", wheel_samples, "number of sampled locus points");

  auto* vertex = app.add_subcommand("vertex", "vertex function by residue summation + oracle");
  std::string rho_txt = "1", vmu_txt, vchamber_txt = "plus";
  int D = 6, N = 96;
  double z_max = 0.05;
  bool unrestricted = false;
  vertex->add_option("--rho", rho_txt, "descendent insertion: 1 | e1 | e1^2");
  vertex->add_option("--mu", vmu_txt, "fixed point (default 1..k)");
  vertex->add_option("--chamber", vchamber_txt, "plus | minus");
  vertex->add_option("--D", D, "total-degree truncation (<= 12)");
  vertex->add_option("--N", N, "quadrature points per circle (32..4096)");
  vertex->add_option("--z-max", z_max, "convergence guardrail for |z| (or |1/z|)");
  vertex->add_flag("--unrestricted-poles", unrestricted,
                   "also report the multi-level tower residues");

  auto* monodromy = app.add_subcommand("monodromy", "monodromy matrix between the two chambers");
  int grid = 0;
  monodromy->add_option("--grid", grid, "emit a CSV of |M_ij| over a log-spaced z annulus");

  auto* selftest = app.add_subcommand("selftest", "run every module's invariant battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  vxl::set_thread_count(g.threads);

  try {
    const json cfg = load_config(g);
    if (cfg.contains("qseries")) vxl::default_qconfig() = vxl::qconfig_from_json(cfg["qseries"]);
    if (interp->parsed()) return cmd_interp(g, cfg, mode, L, xtxt);
    if (stab->parsed()) {
      if (stab_eval->parsed()) return cmd_stab_eval(g, cfg, mu_txt, chamber_txt, x_list);
      if (stab_check->parsed()) return cmd_stab_check(g, cfg);
      if (stab_wheel->parsed())
        return cmd_stab_wheel(g, cfg, mu_txt, chamber_txt, wheel_l, wheel_samples);
    }
    if (vertex->parsed())
      return cmd_vertex(g, cfg, vmu_txt, vchamber_txt, rho_txt, D, N, z_max, unrestricted);
    if (monodromy->parsed()) return cmd_monodromy(g, cfg, grid);
    if (selftest->parsed()) return cmd_selftest(g, cfg);
  } catch (const vxl::ResonanceError& e) {
    std::cerr << "resonance/singularity: " << e.what() << "\n";
    return 3;
  } catch (const vxl::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const vxl::Error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
