#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polargap/backlund.hpp"
#include "polargap/errors.hpp"
#include "polargap/factory.hpp"
#include "polargap/io.hpp"
#include "polargap/onegap.hpp"
#include "polargap/profile.hpp"
#include "polargap/spectral.hpp"
#include "polargap/twogap.hpp"
#include "polargap/verify.hpp"

using namespace polargap;
using nlohmann::json;

namespace {

struct Options {
  double e1 = 1.0, e2 = 0.0, e3 = -1.0;
  std::string family;
  std::string branch = "3";
  std::string out;
  std::string format = "json";
  double gamma = 1.0 / 3.0;
  double x_min = 0.0, x_max = 0.0;
  int n = 101;
  double exclusion = 0.0;
  std::string in = "x";
  std::string form = "both";
  double lambda_max = 0.0;
  std::vector<double> deltas{1e-1, 1e-2, 1e-3};
  bool mutate_a3 = false;
};

bool is_config(ErrorCode c) {
  switch (c) {
    case ErrorCode::non_real_roots:
    case ErrorCode::unordered_roots:
    case ErrorCode::non_zero_sum:
    case ErrorCode::invalid_argument:
    case ErrorCode::zero_e_alpha:
    case ErrorCode::negative_g2:
    case ErrorCode::degenerate_branch:
    case ErrorCode::zero_denominator_constant:
      return true;
    default:
      return false;
  }
}

void add_lattice(CLI::App* app, Options& o) {
  app->add_option("--e1", o.e1, "largest root")->capture_default_str();
  app->add_option("--e2", o.e2, "middle root")->capture_default_str();
  app->add_option("--e3", o.e3, "smallest root")->capture_default_str();
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--out", o.out, "output file (stdout if omitted)");
  app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void add_density(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "density family")->required()->check(CLI::IsMember(density_families()));
  app->add_option("--branch", o.branch, "branch: 1..3, plus, minus")->capture_default_str();
  app->add_option("--gamma", o.gamma, "soliton parameter")->capture_default_str();
}

elliptic::LatticeParams lattice(const Options& o) { return elliptic::lattice_from_roots(o.e1, o.e2, o.e3); }

Density density(const Options& o) { return make_density(o.family, o.branch, lattice(o), o.gamma); }

std::string key_values(const std::vector<std::pair<std::string, double>>& kv, const std::string& format) {
  if (format == "csv") {
    std::string s = "key,value\n";
    for (const auto& [k, v] : kv) s += k + ',' + io::number(v) + '\n';
    return s;
  }
  std::string s = "{";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    s += (i ? ", " : "") + json(kv[i].first).dump() + ": " + io::json_number(kv[i].second);
  }
  return s + "}\n";
}

int cmd_lattice(const Options& o) {
  const auto L = lattice(o);
  io::write_text(o.out, key_values({{"e1", L.e1},
                                    {"e2", L.e2},
                                    {"e3", L.e3},
                                    {"g2", L.g2},
                                    {"g3", L.g3 + 0.0},
                                    {"omega", L.omega},
                                    {"omega_p", L.omega_p},
                                    {"eta", L.eta},
                                    {"eta_p", L.eta_p},
                                    {"legendre_residual", L.legendre_residual()}},
                                   o.format));
  return 0;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + io::json_number(v[i]);
  return s + "]";
}

int cmd_gen(const Options& o) {
  const Density d = density(o);
  if (o.format == "csv") {
    std::string s = "key,value\nname," + d.name + "\nfamily," + std::string(to_string(d.family)) +
                    "\nsmoothness," + std::string(to_string(d.smoothness)) + "\nperiod_x," + io::number(d.period_x) +
                    "\nperiod_y," + io::number(d.period_y) + '\n';
    for (double e : d.band_edges) s += "band_edge," + io::number(e) + '\n';
    for (double z : d.zeros) s += "zero_y," + io::number(z) + '\n';
    for (double p : d.poles) s += "pole_y," + io::number(p) + '\n';
    io::write_text(o.out, s);
    return 0;
  }
  io::write_text(o.out, "{\"name\": " + json(d.name).dump() + ", \"family\": " + json(to_string(d.family)).dump() +
                            ", \"smoothness\": " + json(to_string(d.smoothness)).dump() +
                            ", \"period_x\": " + io::json_number(d.period_x) +
                            ", \"period_y\": " + io::json_number(d.period_y) +
                            ", \"band_edges\": " + list(d.band_edges) + ", \"zeros_y\": " + list(d.zeros) +
                            ", \"poles_y\": " + list(d.poles) + "}\n");
  return 0;
}

int cmd_sample(const Options& o) {
  const Density d = density(o);
  profile::Grid g{o.x_min, o.x_max, o.n};
  if (g.hi == g.lo && g.lo == 0.0) g.hi = d.periodic() ? (o.in == "y" ? d.period_y : d.period_x) : 3.0;
  if (!d.periodic() && o.x_min == 0.0 && o.x_max == 0.0) g.lo = -3.0;
  const auto rows = o.in == "y" ? profile::sample_y(d, g, o.exclusion) : profile::sample(d, g, o.exclusion);
  io::write_text(o.out, o.format == "csv" ? io::sample_csv(rows) : io::sample_json(d.name, rows));
  return 0;
}

double closed_period(const Density& d, const elliptic::LatticeParams& L) {
  switch (d.family) {
    case Family::onegap:
    case Family::onegap_cusp:
    case Family::backlund_onegap:
      return onegap::period_closed_form(d.branch, L);
    case Family::twogap_pm:
      return twogap::period_pm_closed_form(d.branch, L);
    case Family::twogap_alpha:
      return twogap::period_alpha_closed_form(d.branch, L);
    default:
      return NAN;
  }
}

int cmd_period(const Options& o) {
  const Density d = density(o);
  double quad = NAN;
  if (d.periodic() && d.smoothness != Smoothness::discontinuous) quad = verify::period_quadrature(d);
  io::write_text(o.out, key_values({{"period_y", d.period_y},
                                    {"period_x", d.period_x},
                                    {"closed_form", closed_period(d, lattice(o))},
                                    {"quadrature", quad}},
                                   o.format));
  return 0;
}

int cmd_spectrum(const Options& o) {
  const Density d = density(o);
  const double top = o.lambda_max > 0.0 ? o.lambda_max : spectral::default_lambda_max(d.band_edges);
  const int n = static_cast<int>(d.band_edges.size());
  std::vector<std::pair<std::string, spectral::BandStructure>> forms;
  if (o.form != "string") {
    const auto u = hierarchy::liouville_potential(d.R, d.period_y, d.band_edges);
    forms.emplace_back("schrodinger", spectral::band_edges(spectral::PeriodicOperator::schrodinger(u), top, n));
  }
  if (o.form != "schrodinger") {
    forms.emplace_back("string", spectral::band_edges(spectral::PeriodicOperator::string(d), top, n));
  }
  std::vector<double> predicted = d.band_edges;
  std::sort(predicted.begin(), predicted.end());
  if (o.format == "csv") {
    std::string s = "form,index,edge,predicted,sign\n";
    for (const auto& [name, bs] : forms) {
      for (std::size_t i = 0; i < bs.edges.size(); ++i) {
        s += name + ',' + std::to_string(i) + ',' + io::number(bs.edges[i]) + ',' + io::number(predicted[i]) + ',' +
             std::to_string(bs.edge_signs[i]) + '\n';
      }
    }
    io::write_text(o.out, s);
    return 0;
  }
  std::string s = "{\"density\": " + json(d.name).dump() + ", \"predicted\": " + list(predicted);
  for (const auto& [name, bs] : forms) {
    s += ", " + json(name).dump() + ": {\"edges\": " + list(bs.edges) +
         ", \"max_deviation\": " + io::json_number(spectral::max_deviation(bs.edges, predicted)) + "}";
  }
  io::write_text(o.out, s + "}\n");
  return 0;
}

int cmd_backlund(const Options& o) {
  const Density d = density(o);
  const auto p = backlund::backlund_density(d);
  std::vector<std::pair<std::string, double>> kv{{"b", p.b},
                                                 {"fit_residual", p.fit_residual},
                                                 {"product_variation", p.product_variation},
                                                 {"target_period_x", p.target.period_x}};
  for (std::size_t i = 0; i < p.alpha_hat.size(); ++i) kv.emplace_back("alpha_hat" + std::to_string(i + 1), p.alpha_hat[i]);
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) kv.emplace_back("c" + std::to_string(i), p.coefficients[i]);
  io::write_text(o.out, key_values(kv, o.format));
  return 0;
}

int cmd_soliton(const Options& o) {
  const double k = std::sqrt(3.0 * o.gamma);
  std::vector<std::pair<std::string, double>> kv;
  for (double delta : o.deltas) {
    const Density d = onegap::build_cusp(1, onegap::soliton_lattice(o.gamma, delta));
    double m = 0.0;
    for (int i = 0; i < 250; ++i) {
      const double y = 0.5 + 2.5 * (i + 0.5) / 250;
      const double th = std::tanh(k * y);
      m = std::max(m, std::abs(d.r(y) - th * th));
    }
    kv.emplace_back("delta=" + io::number(delta), m);
  }
  io::write_text(o.out, key_values(kv, o.format));
  return 0;
}

int cmd_verify(const Options& o) {
  verify::RunConfig c;
  c.e1 = o.e1;
  c.e2 = o.e2;
  c.e3 = o.e3;
  c.family = o.family.empty() ? "all" : o.family;
  c.tol_scale = verify::Tolerances::env_scale();
  c.tol = verify::Tolerances{}.scaled(c.tol_scale);
  c.mutate_a3 = o.mutate_a3;
  const auto r = verify::run_verify(c);
  int failed = 0;
  for (const auto& k : r.checks) {
    if (k.gating && !k.pass) ++failed;
  }
  std::cerr << r.checks.size() << " records, " << failed << " failed checks: " << (r.pass() ? "PASS" : "FAIL") << '\n';
  if (!o.out.empty() || o.format == "json" || o.format == "csv") {
    io::write_text(o.out, o.format == "csv" ? verify::to_csv(r) : verify::to_json(r));
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-gap densities of the polar operator: generation, sampling, spectra, verification"};
  app.require_subcommand(1);
  Options o;

  auto* lat = app.add_subcommand("lattice", "Weierstrass data of a lattice");
  add_lattice(lat, o);
  add_output(lat, o);

  auto* den = app.add_subcommand("density", "density generation and sampling");
  den->require_subcommand(1);
  auto* gen = den->add_subcommand("gen", "construct a density and print its data");
  auto* sam = den->add_subcommand("sample", "tabulate r(x) on a grid");
  auto* per = den->add_subcommand("period", "closed-form and measured periods");
  for (auto* s : {gen, sam, per}) {
    add_lattice(s, o);
    add_density(s, o);
    add_output(s, o);
  }
  sam->add_option("--x-min", o.x_min, "grid start (default: 0)");
  sam->add_option("--x-max", o.x_max, "grid end (default: one period)");
  sam->add_option("--n", o.n, "grid points")->check(CLI::Range(2, 10000000))->capture_default_str();
  sam->add_option("--exclusion", o.exclusion, "skip points this close to a cusp or pole, relative to the period");
  sam->add_option("--in", o.in, "grid variable: x or y")->check(CLI::IsMember({"x", "y"}))->capture_default_str();

  auto* spec = app.add_subcommand("spectrum", "band edges of the Schroedinger and string forms");
  add_lattice(spec, o);
  add_density(spec, o);
  add_output(spec, o);
  spec->add_option("--form", o.form, "schrodinger, string or both")
      ->check(CLI::IsMember({"schrodinger", "string", "both"}))
      ->capture_default_str();
  spec->add_option("--lambda-max", o.lambda_max, "top of the scan (default from the predicted edges)");

  auto* bl = app.add_subcommand("backlund", "transformed density of a smooth density");
  add_lattice(bl, o);
  add_density(bl, o);
  add_output(bl, o);

  auto* lim = app.add_subcommand("limit", "degenerate limits");
  lim->require_subcommand(1);
  auto* sol = lim->add_subcommand("soliton", "distance of the cusp density from tanh^2");
  sol->add_option("--gamma", o.gamma, "soliton parameter")->capture_default_str();
  sol->add_option("--delta", o.deltas, "band widths e2 - e3")->capture_default_str();
  add_output(sol, o);

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  add_lattice(ver, o);
  add_output(ver, o);
  ver->add_option("--family", o.family, "check group")->check(CLI::IsMember(verify::family_names()));
  ver->add_flag("--mutate-a3", o.mutate_a3)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (lat->parsed()) return cmd_lattice(o);
    if (gen->parsed()) return cmd_gen(o);
    if (sam->parsed()) return cmd_sample(o);
    if (per->parsed()) return cmd_period(o);
    if (spec->parsed()) return cmd_spectrum(o);
    if (bl->parsed()) return cmd_backlund(o);
    if (sol->parsed()) return cmd_soliton(o);
    if (ver->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_config(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
