#include "wavefront/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "wavefront/admissible.hpp"
#include "wavefront/biomodel.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/profile.hpp"
#include "wavefront/quadrature.hpp"

namespace wavefront {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::optional<std::string> VerifyReport::first_failure() const {
  for (const VerifyCheck& c : checks)
    if (!c.passed) return c.name;
  return std::nullopt;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

class Runner {
 public:
  explicit Runner(VerifyReport& r) : report_(r) {}

  // Runs `body`, which returns (passed, detail); exceptions become failures.
  bool check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    VerifyCheck c{name, false, ""};
    try {
      auto [ok, detail] = body();
      c.passed = ok;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    report_.checks.push_back(c);
    return c.passed;
  }

 private:
  VerifyReport& report_;
};

}  // namespace

VerifyReport run_verify(const ModelConfig& cfg, const VerifyOptions& opts) {
  VerifyReport report;
  Runner run(report);

  if (cfg.bio && !run.check("bio.params", [&] {
        bio::validate(*cfg.bio);
        return std::pair{true, "omega=" + fmt(bio::omega_of(*cfg.bio))};
      }))
    return report;

  std::optional<ModelSpec> model;
  if (!run.check("model.structure", [&] {
        model = build_model(cfg);
        return std::pair{true, "alpha=" + fmt(model->alpha()) + " beta=" + fmt(model->beta()) +
                                   " gamma=" + fmt(model->gamma())};
      }))
    return report;
  const ModelSpec& m = *model;
  const RegimeClass rc = classify(m);
  run.check("model.regime", [&] { return std::pair{true, to_string(rc.kind)}; });

  if (rc.kind == RegimeKind::PiecewiseConstantOnly) {
    run.check("admissible.step_fronts", [&] {
      const auto fronts = step_fronts(m);
      bool ok = !fronts.empty();
      for (const auto& f : fronts) ok = ok && verify_step_front(m, f).passes(1e-10, 1e-8, 0.0);
      return std::pair{ok, std::to_string(fronts.size()) + " step front(s)"};
    });
    return report;
  }
  if (rc.kind == RegimeKind::NoShock) return report;

  std::optional<AdmissibleSet> adm;
  if (!run.check("admissible.build", [&] {
        adm = admissible_set(m);
        return std::pair{true, "I=[" + fmt(adm->I_lo()) + ", " + fmt(adm->I_hi()) + "]"};
      }))
    return report;
  const AdmissibleSet& A = *adm;

  run.check("admissible.equal_area", [&] {
    double dmax = 0.0;
    for (int i = 0; i <= 1000; ++i) dmax = std::max(dmax, std::abs(m.D(i / 1000.0)));
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> u(A.I_lo(), A.I_hi());
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double pl = u(rng);
      const double area = quad::integrate([&](double s) { return m.D(s); }, pl, A.eta(pl), 1e-13);
      worst = std::max(worst, std::abs(area));
    }
    return std::pair{worst <= 1e-8 * dmax, "max |int D| = " + fmt(worst)};
  });

  run.check("admissible.eta_increasing", [&] {
    const auto& t = A.table();
    bool ok = true;
    for (std::size_t i = 1; i < t.size(); ++i) ok = ok && t[i].second > t[i - 1].second;
    return std::pair{ok || t.size() <= 1, std::to_string(t.size()) + " table nodes"};
  });

  const double mid = 0.5 * (A.I_lo() + A.I_hi());
  std::optional<SpeedResult> sr_mid;
  if (!run.check("speed.solve_midpoint", [&] {
        sr_mid = solve_speed(A, mid, opts.speed);
        return std::pair{sr_mid->trusted, "c*=" + fmt(sr_mid->c_star) + " F_residual=" + fmt(sr_mid->F_residual)};
      }))
    return report;
  const double cstar = sr_mid->c_star;

  run.check("speed.F_increasing_in_c", [&] {
    double prev = -INFINITY;
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      const double c = cstar - 5.0 + 10.0 * i / 19.0;
      const double f = F(A, c, mid, opts.speed.z);
      ok = ok && f > prev + 1e-10;
      prev = f;
    }
    return std::pair{ok, std::string("20 speeds around c*")};
  });

  run.check("speed.F_increasing_in_phi_l", [&] {
    if (A.I_hi() <= A.I_lo()) return std::pair{true, std::string("degenerate admissible set")};
    double prev = -INFINITY;
    bool ok = true;
    for (int i = 1; i < 11; ++i) {
      const double pl = A.I_lo() + (A.I_hi() - A.I_lo()) * i / 11.0;
      const double f = F(A, cstar, pl, opts.speed.z);
      ok = ok && f > prev;
      prev = f;
    }
    return std::pair{ok, std::string("10 interior left states at c*(midpoint)")};
  });

  const std::vector<SweepRow> rows = sweep(A, std::max(opts.sweep_n, 2), opts.speed);
  run.check("speed.sweep_solved", [&] {
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.result; });
    return std::pair{bad == 0, std::to_string(bad) + " failed rows"};
  });
  run.check("speed.sweep_monotone", [&] {
    const auto v = first_monotonicity_violation(rows);
    return std::pair{!v.has_value(), v ? "violation at row " + std::to_string(*v) : std::string("strictly decreasing")};
  });
  run.check("speed.consistency", [&] {
    double worst = 0.0;
    for (const auto& r : rows)
      if (r.result) worst = std::max(worst, r.result->consistency_defect);
    return std::pair{worst <= 1e-6, "max defect " + fmt(worst)};
  });
  run.check("speed.bounds", [&] {
    try {
      const SpeedBounds b = speed_bounds(m);
      bool ok = b.c_minus < b.c_plus;
      for (const auto& r : rows)
        if (r.result) ok = ok && r.result->c_star > b.c_minus && r.result->c_star < b.c_plus;
      return std::pair{ok, "(" + fmt(b.c_minus) + ", " + fmt(b.c_plus) + ")"};
    } catch (const PreconditionError& e) {
      return std::pair{true, std::string("skipped: ") + e.what()};
    }
  });

  if (cfg.bio) {
    run.check("bio.speed_interval", [&] {
      const auto [lo, hi] = bio::speed_interval(*cfg.bio);
      bool ok = true;
      for (const auto& r : rows)
        if (r.result) ok = ok && r.result->c_star > lo && r.result->c_star < hi;
      return std::pair{ok, "(" + fmt(lo) + ", " + fmt(hi) + ")"};
    });
    run.check("bio.closed_form", [&] {
      const bio::BioDerived d = bio::derive(*cfg.bio);
      const double err = std::max({std::abs(d.alpha - m.alpha()), std::abs(d.beta - m.beta()),
                                   std::abs(d.gamma - m.gamma()), std::abs(d.I_lo - A.I_lo()),
                                   std::abs(d.I_hi - A.I_hi()), std::abs(bio::eta_closed(d, mid) - A.eta(mid))});
      return std::pair{err <= 1e-9, "max deviation " + fmt(err)};
    });
  }

  run.check("zfield.ordering_in_c", [&] {
    bool ok = true;
    for (int i = 1; i <= 10; ++i) {
      const double pu = m.beta() + (1.0 - m.beta()) * i / 11.0;
      const double pl = m.alpha() * i / 11.0;
      double prev_u = -INFINITY, prev_l = INFINITY;
      for (double c : {-1.0, 0.0, 1.0}) {
        const double zu = z_value(m, Branch::Upper, c, pu, opts.speed.z);
        const double zl = z_value(m, Branch::Lower, c, pl, opts.speed.z);
        ok = ok && zu > prev_u && zl < prev_l;
        prev_u = zu;
        prev_l = zl;
      }
    }
    return std::pair{ok, std::string("c in {-1, 0, 1}, 10 points per band")};
  });

  ProfileOptions po;
  po.z = opts.speed.z;
  std::optional<ShockProfile> prof;
  run.check("profile.weak_residual", [&] {
    prof = build_profile(m, *sr_mid, po);
    const WeakReport w = verify_weak(m, *prof);
    return std::pair{w.passes(), "sup residual " + fmt(w.sup_residual) + ", flux defect " + fmt(w.jump_flux_defect) +
                                     ", monotonicity violations " + std::to_string(w.monotonicity_violations)};
  });
  run.check("profile.negative_control", [&] {
    SpeedResult bad = *sr_mid;
    bad.c_star += 0.01;
    ProfileOptions pn = po;
    pn.check_consistency = false;
    const WeakReport w = verify_weak(m, build_profile(m, bad, pn));
    return std::pair{w.jump_flux_defect > 1e-3, "flux defect at c*+0.01: " + fmt(w.jump_flux_defect)};
  });
  if (prof) {
    run.check("profile.entropic", [&] {
      const auto cs = characteristic_speeds(m, *prof);
      return std::pair{cs.entropic, std::to_string(cs.speeds.size()) + " characteristic speeds"};
    });
    run.check("profile.translation", [&] {
      ProfileOptions shifted = po;
      shifted.xi_s = 7.3;
      const ShockProfile q = build_profile(m, *sr_mid, shifted);
      const auto a = ordered_samples(*prof), b = ordered_samples(q);
      double worst = a.size() == b.size() ? 0.0 : INFINITY;
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        worst = std::max(worst, std::abs(b[i].xi - a[i].xi - 7.3));
      return std::pair{worst <= 1e-9, "max shift error " + fmt(worst)};
    });
  }
  return report;
}

}  // namespace wavefront
