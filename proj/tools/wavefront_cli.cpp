// Command-line front end for the shock wavefront toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wavefront/admissible.hpp"
#include "wavefront/biomodel.hpp"
#include "wavefront/config.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/profile.hpp"
#include "wavefront/speed.hpp"
#include "wavefront/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wavefront;

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kBracket = 3, kMonotone = 4 };

struct Common {
  std::string model_path;
  std::string out_dir = ".";
  double tol_c = 1e-9;
  double tol_ode = 1e-10;
  bool json_out = false;
  bool plot = false;
};

struct Extra {
  int sweep_n = 41;
  int points = 101;
  std::optional<double> phi_l;
  bool svg = false;
  int samples = 512;
};

ModelConfig load(const Common& c) {
  return c.model_path.empty() ? default_model_config() : load_model_config(c.model_path);
}

SpeedOptions speed_options(const Common& c) {
  SpeedOptions so;
  so.tol_c = c.tol_c;
  so.z.rtol = c.tol_ode;
  so.z.atol = std::min(so.z.atol, c.tol_ode);
  return so;
}

fs::path out_file(const Common& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir) / name;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ParamError("cannot write '" + p.string() + "'");
  return os;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json speed_json(const SpeedResult& r) {
  return {{"phi_l", r.phi_l},
          {"phi_r", r.phi_r},
          {"c_star", r.c_star},
          {"bracket", {r.bracket.first, r.bracket.second}},
          {"F_residual", r.F_residual},
          {"z_l", r.z_l},
          {"z_r", r.z_r},
          {"consistency_defect", r.consistency_defect},
          {"trusted", r.trusted}};
}

json weak_json(const WeakReport& w) {
  return {{"sup_residual", w.sup_residual},
          {"sup_residual_upper", w.sup_residual_upper},
          {"sup_residual_lower", w.sup_residual_lower},
          {"jump_P_defect", w.jump_P_defect},
          {"jump_flux_defect", w.jump_flux_defect},
          {"monotonicity_violations", w.monotonicity_violations},
          {"redifferentiation_defect", w.redifferentiation_defect},
          {"passes", w.passes()}};
}

int cmd_analyze(const Common& c) {
  const ModelSpec m = build_model(load(c));
  const RegimeClass rc = classify(m);
  json j = {{"alpha", m.alpha()},
            {"beta", m.beta()},
            {"gamma", m.gamma()},
            {"P_values", {{"P0", m.P(0.0)}, {"Palpha", m.P(m.alpha())}, {"Pbeta", m.P(m.beta())}, {"P1", m.P(1.0)}}},
            {"regime", to_string(rc.kind)}};
  emit(j);
  return kOk;
}

int cmd_admissible(const Common& c, const Extra& x) {
  const ModelSpec m = build_model(load(c));
  const AdmissibleSet a = admissible_set(m);
  const fs::path p = out_file(c, "admissible.csv");
  auto os = open_out(p);
  write_admissible_csv(os, a, std::max(x.points, 2));
  json j = {{"I", {a.I_lo(), a.I_hi()}}, {"J", {a.J_lo(), a.J_hi()}}, {"csv", p.string()}};
  if (c.json_out) emit(j);
  else std::cout << "I = [" << a.I_lo() << ", " << a.I_hi() << "], eta(I) = [" << a.J_lo() << ", " << a.J_hi()
                 << "] -> " << p.string() << "\n";
  return kOk;
}

int cmd_speed(const Common& c, const Extra& x) {
  const ModelSpec m = build_model(load(c));
  const AdmissibleSet a = admissible_set(m);
  const double pl = x.phi_l.value_or(0.5 * (a.I_lo() + a.I_hi()));
  const SpeedResult r = solve_speed(a, pl, speed_options(c));
  if (c.json_out) emit(speed_json(r));
  else std::cout << "phi_l = " << r.phi_l << ", phi_r = " << r.phi_r << ", c* = " << r.c_star << "\n";
  return kOk;
}

int cmd_sweep(const Common& c, const Extra& x) {
  if (x.sweep_n < 2) throw ParamError("--sweep-n must be at least 2");
  const ModelConfig cfg = load(c);
  const ModelSpec m = build_model(cfg);
  const AdmissibleSet a = admissible_set(m);
  const std::vector<SweepRow> rows = sweep(a, x.sweep_n, speed_options(c));

  const fs::path p = out_file(c, "sweep.csv");
  {
    auto os = open_out(p);
    write_sweep_csv(os, rows);
  }
  if (c.plot) {
    auto gp = open_out(out_file(c, "sweep.gp"));
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'phi_l'\nset ylabel 'c*'\n"
       << "plot '" << p.filename().string() << "' using 1:3 with linespoints title 'c*(phi_l)'\n";
  }

  const auto failures = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.bracket_failure; });
  const auto violation = first_monotonicity_violation(rows);
  json j = {{"rows", rows.size()}, {"bracket_failures", failures}, {"csv", p.string()}};
  j["monotone"] = !violation.has_value();
  if (violation) j["first_violation_row"] = *violation;
  if (cfg.bio) {
    const auto [lo, hi] = bio::speed_interval(*cfg.bio);
    bool inside = true;
    for (const auto& r : rows)
      if (r.result) inside = inside && r.result->c_star > lo && r.result->c_star < hi;
    j["speed_interval"] = {lo, hi};
    j["inside_speed_interval"] = inside;
  }
  for (const auto& r : rows)
    if (!r.result) std::cerr << "row phi_l=" << r.phi_l << ": " << r.error << "\n";
  if (c.json_out) emit(j);
  else std::cout << rows.size() << " rows -> " << p.string() << (violation ? " (NOT monotone)" : "") << "\n";

  if (failures > 0) return kBracket;
  if (violation) return kMonotone;
  return kOk;
}

void write_svg(std::ostream& os, const std::vector<ProfileSample>& s) {
  double x0 = INFINITY, x1 = -INFINITY;
  for (const auto& p : s) {
    x0 = std::min(x0, p.xi);
    x1 = std::max(x1, p.xi);
  }
  const double w = 800, h = 400, pad = 20;
  auto X = [&](double xi) { return pad + (w - 2 * pad) * (xi - x0) / std::max(x1 - x0, 1e-300); };
  auto Y = [&](double phi) { return h - pad - (h - 2 * pad) * phi; };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n"
     << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (const auto& p : s) os << X(p.xi) << "," << Y(p.phi) << " ";
  os << "\"/>\n</svg>\n";
}

int cmd_profile(const Common& c, const Extra& x) {
  const ModelSpec m = build_model(load(c));
  const AdmissibleSet a = admissible_set(m);
  const double pl = x.phi_l.value_or(0.5 * (a.I_lo() + a.I_hi()));
  const SpeedOptions so = speed_options(c);
  const SpeedResult r = solve_speed(a, pl, so);
  ProfileOptions po;
  po.z = so.z;
  po.samples_per_band = x.samples;
  const ShockProfile prof = build_profile(m, r, po);
  const WeakReport w = verify_weak(m, prof);

  const fs::path p = out_file(c, "profile.csv");
  {
    auto os = open_out(p);
    write_profile_csv(os, m, prof);
  }
  if (c.plot) {
    auto gp = open_out(out_file(c, "profile.gp"));
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'xi'\nset ylabel 'phi'\nset yrange [-0.05:1.05]\n"
       << "plot '" << p.filename().string() << "' using 1:2 with lines title 'phi(xi)'\n";
  }
  if (x.svg) {
    auto os = open_out(out_file(c, "profile.svg"));
    write_svg(os, ordered_samples(prof));
  }
  json j = {{"speed", speed_json(r)},
            {"verify_weak", weak_json(w)},
            {"saturation",
             {{"reaches_1_at_finite_xi", prof.saturation.reaches_1_at_finite_xi},
              {"reaches_0_at_finite_xi", prof.saturation.reaches_0_at_finite_xi}}},
            {"csv", p.string()}};
  if (c.json_out) emit(j);
  else std::cout << "c* = " << r.c_star << ", sup residual = " << w.sup_residual << " -> " << p.string() << "\n";
  return w.passes() ? kOk : kFailure;
}

int cmd_bio(const Common& c) {
  const ModelConfig cfg = load(c);
  if (!cfg.bio) throw ParamError("the bio command needs a model of type 'bio'");
  const bio::BioDerived d = bio::derive(*cfg.bio);
  const auto [lo, hi] = bio::speed_interval(*cfg.bio);
  json j = {{"omega", d.omega},
            {"alpha", d.alpha},
            {"beta", d.beta},
            {"gamma", d.gamma},
            {"I", {d.I_lo, d.I_hi}},
            {"eta_endpoints", {bio::eta_closed(d, d.I_lo), bio::eta_closed(d, d.I_hi)}},
            {"dcont_phi_l", d.dcont_phi_l ? json(*d.dcont_phi_l) : json(nullptr)},
            {"jump_max_phi_l", d.jump_max_phi_l},
            {"speed_interval", {lo, hi}}};
  emit(j);
  return kOk;
}

int cmd_verify(const Common& c) {
  VerifyReport rep;
  try {
    VerifyOptions vo;
    vo.speed = speed_options(c);
    rep = run_verify(load(c), vo);
  } catch (const Error& e) {
    rep.checks.push_back({"model.load", false, e.what()});
  }
  json checks = json::array();
  for (const auto& ch : rep.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
  json j = {{"passed", rep.passed()}, {"checks", checks}};
  const auto first = rep.first_failure();
  j["first_failure"] = first ? json(*first) : json(nullptr);
  emit(j);
  if (first) {
    std::cerr << "verify failed: " << *first << "\n";
    return kFailure;
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--model", c.model_path, "model JSON file (default: built-in bio model)");
  sub->add_option("--out", c.out_dir, "output directory");
  sub->add_option("--tol-c", c.tol_c, "speed bisection tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--tol-ode", c.tol_ode, "relative tolerance of the z integrator")->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json_out, "print a JSON summary");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shock traveling wavefronts for u_t = P(u)_xx + g(u)"};
  app.require_subcommand(1);
  Common c;
  Extra x;

  auto* analyze = app.add_subcommand("analyze", "zeros, potential values and regime");
  auto* admissible = app.add_subcommand("admissible", "admissible left states and the pairing map");
  auto* speed = app.add_subcommand("speed", "speed c* for one left state");
  auto* sweepc = app.add_subcommand("sweep", "c* over equally spaced admissible left states");
  auto* profile = app.add_subcommand("profile", "profile phi(xi) with weak-form check");
  auto* bioc = app.add_subcommand("bio", "closed-form quantities of the invasion model");
  auto* verify = app.add_subcommand("verify", "run every invariant check");
  for (auto* s : {analyze, admissible, speed, sweepc, profile, bioc, verify}) add_common(s, c);

  admissible->add_option("--points", x.points, "number of table rows");
  speed->add_option("--phi-l", x.phi_l, "left state (default: midpoint of I)");
  sweepc->add_option("--sweep-n", x.sweep_n, "number of left states");
  sweepc->add_flag("--plot", c.plot, "emit a gnuplot script");
  profile->add_option("--phi-l", x.phi_l, "left state (default: midpoint of I)");
  profile->add_option("--samples", x.samples, "samples per band")->check(CLI::Range(8, 1 << 20));
  profile->add_flag("--plot", c.plot, "emit a gnuplot script");
  profile->add_flag("--svg", x.svg, "emit an SVG polyline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfig;
  }

  try {
    if (*analyze) return cmd_analyze(c);
    if (*admissible) return cmd_admissible(c, x);
    if (*speed) return cmd_speed(c, x);
    if (*sweepc) return cmd_sweep(c, x);
    if (*profile) return cmd_profile(c, x);
    if (*bioc) return cmd_bio(c);
    if (*verify) return cmd_verify(c);
  } catch (const StructureViolation& e) {
    std::cerr << "structure violation: " << e.what() << "\n";
    return kConfig;
  } catch (const ParamError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "out of domain: " << e.what() << "\n";
    return kConfig;
  } catch (const RegimeError& e) {
    std::cerr << "wrong regime: " << e.what() << "\n";
    return kConfig;
  } catch (const BracketFailure& e) {
    std::cerr << "bracket failure: " << e.what() << "\n";
    return kBracket;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
