#include "lieforge/suites.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lieforge {

namespace {

using Reports = std::vector<CheckReport>;

// Runs `fn`, converting a library error into a failed report so one broken
// set cannot abort the remaining checks.
void guard(Reports& out, IdentityId id, const std::string& label, const std::function<void(Reports&)>& fn) {
  try {
    fn(out);
  } catch (const Error& e) {
    out.push_back(CheckReport::make(id, label, std::numeric_limits<double>::max(), 0.0,
                                    Witness{{}, std::string(e.code()) + ": " + e.what()}));
  }
}

void prefix_labels(Reports& rs, const std::string& prefix) {
  for (auto& r : rs) r.label = prefix + r.label;
}

// Collapses a family of reports into one summary report with the worst residual.
CheckReport summarize(IdentityId id, const std::string& label, const Reports& rs) {
  const CheckReport* worst = nullptr;
  for (const auto& r : rs) {
    if (!worst || !(r.max_residual / r.tolerance <= worst->max_residual / worst->tolerance)) worst = &r;
  }
  if (!worst) return CheckReport::make(id, label, 0.0, 1.0);
  std::optional<Witness> w = worst->witness;
  if (w) w->description = worst->label + ": " + w->description;
  return CheckReport::make(id, label, worst->max_residual, worst->tolerance, w,
                           std::to_string(rs.size()) + " relations; worst: " + worst->label);
}

std::string fmt_double(double v) {
  if (std::abs(v) < 1e-15) return "0";
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string fmt_scalar(CScalar z) {
  const double re = std::abs(z.real()) < 1e-15 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-15 ? 0.0 : z.imag();
  if (im == 0.0) return fmt_double(re);
  std::string imag = im == 1.0 ? "i" : im == -1.0 ? "-i" : fmt_double(im) + "i";
  if (re == 0.0) return imag;
  return fmt_double(re) + (im > 0 ? "+" : "") + imag;
}

std::string format_set(const std::string& name, const GeneratorSet& s) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= s.size(); ++i) os << name << "^" << i << " = " << format_matrix(s[i]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

SuiteResult run_verify(const Catalog& cat, const SuiteConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  const CScalar alpha = cfg.alpha;
  Reports out;

  // Step 1: the 2-rep
  guard(out, IdentityId::Eq2, "SU(2) fundamental", [&](Reports& r) {
    auto rs = check_su2_fundamental(cat.at("J2"), tol);
    r.insert(r.end(), rs.begin(), rs.end());
  });
  guard(out, IdentityId::Eq6, "[V,J] 2-rep", [&](Reports& r) {
    r.push_back(check_vector_rotation(cat.at("V2"), cat.at("J2"), IdentityId::Eq6, tol));
  });
  guard(out, IdentityId::Eq7, "Lorentz 2-rep", [&](Reports& r) {
    auto rs = check_lorentz(cat.at("J2"), cat.at("K2"), tol);
    r.insert(r.end(), rs.begin(), rs.end());
  });
  guard(out, IdentityId::Eq7, "2-rep [V,K] asymmetry", [&](Reports& r) { r.push_back(check_2rep_vk_asymmetry(tol)); });

  // Step 2: the (2+2)-rep
  const auto& j = cat.at("J22");
  const auto& k = cat.at("K22");
  const auto& v = cat.at("V22");
  guard(out, IdentityId::Eq10, "[V,J] (2+2)", [&](Reports& r) {
    r.push_back(check_vector_rotation(v, j, IdentityId::Eq10, tol));
  });
  guard(out, IdentityId::Eq11, "Lorentz (2+2)", [&](Reports& r) {
    auto rs = check_lorentz(j, k, tol);
    r.insert(r.end(), rs.begin(), rs.end());
  });
  guard(out, IdentityId::Eq12, "[V,K] block form", [&](Reports& r) {
    r.push_back(check_vk_block_form(v, k, cat.vector_params(), tol));
  });
  guard(out, IdentityId::Eq13, "[V^i,K^j]", [&](Reports& r) { r.push_back(check_spatial_vector_boost(v, k, alpha, tol)); });
  guard(out, IdentityId::Eq15, "[V^4,K^j]", [&](Reports& r) { r.push_back(check_time_vector_boost(v, k, alpha, tol)); });
  for (const char* branch : {"P+", "P-"}) {
    guard(out, IdentityId::Eq16, std::string(branch) + " commute", [&](Reports& r) {
      auto rep = check_momentum_commute(cat.at(branch), IdentityId::Eq16, tol);
      rep.label = std::string(branch) + ": " + rep.label;
      r.push_back(rep);
    });
  }
  for (const char* branch : {"P+", "P-"}) {
    guard(out, IdentityId::Eq18, std::string(branch) + " Poincare", [&](Reports& r) {
      auto rs = check_poincare(j, k, cat.at(branch), alpha, tol);
      prefix_labels(rs, std::string(branch) + ": ");
      r.insert(r.end(), rs.begin(), rs.end());
    });
  }

  // gamma5-projected vector matrices are momentum matrices
  guard(out, IdentityId::Ex4, "gamma5 projections", [&](Reports& r) {
    const auto [plus, minus] = gamma5_projectors();
    Reports all;
    for (const auto& [name, proj] : {std::pair{"(1+g5)/2 V", plus}, std::pair{"(1-g5)/2 V", minus}}) {
      auto rs = check_poincare(j, k, project_vector(proj, v), alpha, tol);
      prefix_labels(rs, std::string(name) + ": ");
      all.insert(all.end(), rs.begin(), rs.end());
    }
    r.insert(r.end(), all.begin(), all.end());
    r.push_back(summarize(IdentityId::Ex4, "gamma5-projected V are momentum matrices", all));
  });
  return {std::move(out), {}};
}

SuiteResult run_transfer(const Catalog& cat, const SuiteConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  const auto& j = cat.at("J22");
  const auto& k = cat.at("K22");
  const auto& j4 = cat.at("J4");
  const auto& k4 = cat.at("K4");
  SuiteResult res;

  guard(res.reports, IdentityId::Eq24, "transfer (V22)", [&](Reports& r) {
    auto rs = verify_transfer(cat.at("V22"), j, k, j4, k4, cfg.alpha, tol);
    r.insert(r.end(), rs.begin(), rs.end());
  });

  // Momentum sets exercise the single-block extraction path.
  for (const char* branch : {"P+", "P-"}) {
    guard(res.reports, IdentityId::Eq25, std::string("extraction from ") + branch, [&](Reports& r) {
      const auto a = extract_coeffs(cat.at(branch), j, tol);
      const auto b = extract_coeffs(cat.at(branch), k, tol);
      const auto b_closed = boost_coefficients(cfg.alpha);
      ResidualTracker t;
      for (int i = 1; i <= 3; ++i) {
        t.observe(frobenius_distance(a.slice(i), j4[i]), {i, 1}, "a^" + std::to_string(i));
        t.observe(frobenius_distance(b.slice(i), b_closed[i]), {i, 2}, "b^" + std::to_string(i));
      }
      r.push_back(t.report(IdentityId::Eq25,
                           std::string(branch) + ": single-block (" + std::string(to_string(a.blocks())) +
                               ") extraction = closed forms",
                           tol.abs_eps, "block consistency check skipped: only one block family is nonzero"));
      res.artifacts.push_back({std::string("coeffs_a_") + branch, to_json(a), ""});
      res.artifacts.push_back({std::string("coeffs_b_") + branch, to_json(b), ""});
    });
  }

  try {
    const auto a = extract_coeffs(cat.at("V22"), j, tol);
    const auto b = extract_coeffs(cat.at("V22"), k, tol);
    res.artifacts.insert(res.artifacts.begin(), {{"coeffs_a", to_json(a), ""}, {"coeffs_b", to_json(b), ""}});
  } catch (const Error&) {
    // already reported as a failed Eq24 check above
  }
  res.artifacts.insert(res.artifacts.begin(), {{"J4", to_json(j4), format_set("J4", j4)}, {"K4", to_json(k4), format_set("K4", k4)}});
  return res;
}

Reports det_identity(std::uint32_t trials, std::uint64_t seed, const Tolerance& tol, IdentityId id) {
  SeededRng rng(seed);
  ResidualTracker t;
  for (std::uint32_t n = 0; n < trials; ++n) {
    const FourVector x = rng.four_vector(10.0);
    const double err = std::abs(interval_sq_via_det(x) - interval_sq(x)) /
                       std::max(1.0, x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]);
    t.observe(err, {static_cast<int>(n)}, "trial " + std::to_string(n));
  }
  return {t.report(id, "-det(x^mu sigma^mu) = x^i x^i - x^4 x^4 (" + std::to_string(trials) + " draws, relative to max(1,|x|^2))",
                   tol.abs_eps)};
}

Reports intertwining(const Catalog& cat, const SuiteConfig& cfg) {
  const std::uint32_t draws = std::min<std::uint32_t>(cfg.trials, 100);
  Reports out;
  struct Rep {
    const char *j, *k, *v, *label;
  };
  for (const Rep& rep : {Rep{"J22", "K22", "gamma", "gamma matrices"}, Rep{"J5", "K5", "P5", "affine rep"}}) {
    guard(out, IdentityId::Ex6, std::string("intertwining, ") + rep.label, [&](Reports& r) {
      SeededRng rng(cfg.seed + 7);
      Reports per;
      for (std::uint32_t n = 0; n < draws; ++n)
        per.push_back(intertwine_check(cat.at(rep.j), cat.at(rep.k), cat.at(rep.v), rng.rot_boost(1.0), cfg.tol));
      r.push_back(summarize(IdentityId::Ex6,
                            "D V^mu D^-1 = Lambda_nu^mu V^nu, " + std::string(rep.label) + " (" +
                                std::to_string(draws) + " draws)",
                            per));
    });
  }
  return out;
}

SuiteResult run_invariants(const Catalog& cat, const SuiteConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  Reports out;
  guard(out, IdentityId::Eq27, "rotation invariance", [&](Reports& r) {
    r.push_back(rotation_invariance_check(cfg.trials, cfg.seed, tol));
  });
  guard(out, IdentityId::Eq29, "boost invariance", [&](Reports& r) {
    r.push_back(boost_invariance_check(cfg.trials, cfg.seed + 1, tol));
  });
  guard(out, IdentityId::Ex1, "determinant identity", [&](Reports& r) {
    auto rs = det_identity(cfg.trials, cfg.seed + 2, tol, IdentityId::Ex1);
    r.insert(r.end(), rs.begin(), rs.end());
  });

  guard(out, IdentityId::Eq30, "translation of differences", [&](Reports& r) {
    SeededRng rng(cfg.seed + 3);
    ResidualTracker t;
    for (std::uint32_t n = 0; n < cfg.trials; ++n) {
      const FourVector x0 = rng.four_vector(10.0), x1 = rng.four_vector(10.0);
      const AffineTransform shift{CMatrix::identity(4), rng.four_vector(100.0)};
      const FourVector diff = affine_apply(shift, x1, tol) - affine_apply(shift, x0, tol);
      const FourVector want = x1 - x0;
      double err = 0.0;
      for (int mu = 1; mu <= 4; ++mu) err = std::max(err, std::abs(diff[mu] - want[mu]));
      t.observe(err / 100.0, {static_cast<int>(n)}, "trial " + std::to_string(n));
    }
    r.push_back(t.report(IdentityId::Eq30, "coordinate differences invariant under translation (relative to |a|)", tol.abs_eps));
  });

  guard(out, IdentityId::Eq31, "affine composition", [&](Reports& r) {
    SeededRng rng(cfg.seed + 4);
    ResidualTracker t;
    for (std::uint32_t n = 0; n < cfg.trials; ++n) {
      const AffineTransform t1{d4(rng.rot_boost(1.0), tol), rng.four_vector(10.0)};
      const AffineTransform t2{d4(rng.rot_boost(1.0), tol), rng.four_vector(10.0)};
      const FourVector x = rng.four_vector(10.0);
      const FourVector stepwise = affine_apply(t2, affine_apply(t1, x, tol), tol);
      const FourVector composed = affine_apply(t2.compose(t1), x, tol);
      // the 5x5 product must agree with the composed transform
      const double product_gap = frobenius_distance(t2.to_matrix() * t1.to_matrix(), t2.compose(t1).to_matrix());
      double err = product_gap;
      double scale = 1.0;
      for (int mu = 1; mu <= 4; ++mu) {
        err = std::max(err, std::abs(stepwise[mu] - composed[mu]));
        scale = std::max(scale, std::abs(stepwise[mu]));
      }
      t.observe(err / scale, {static_cast<int>(n)}, "trial " + std::to_string(n));
    }
    r.push_back(t.report(IdentityId::Eq31, "append-one device composes as the 5x5 product", tol.exp_eps));
  });

  auto ex6 = intertwining(cat, cfg);
  out.insert(out.end(), ex6.begin(), ex6.end());
  return {std::move(out), {}};
}

std::size_t nonzeros(const std::vector<double>& v, double eps) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](double x) { return std::abs(x) > eps; }));
}

SuiteResult run_sun(const Catalog& cat, const SuiteConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  SuiteResult res;
  Reports& out = res.reports;

  std::optional<StructureTensors> st2, st3;
  guard(out, IdentityId::Ex7, "SU(2) structure", [&](Reports& r) {
    st2 = extract_structure(cat.at("J2").members(), tol);
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): f reconstructs all [J,J]", st2->commutator_residual, tol.abs_eps));
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): d reconstructs all {J,J}", st2->anticommutator_residual, tol.abs_eps));
    double eps_gap = 0.0, max_d = 0.0;
    for (std::size_t a = 1; a <= 3; ++a)
      for (std::size_t b = 1; b <= 3; ++b)
        for (std::size_t c = 1; c <= 3; ++c) {
          eps_gap = std::max(eps_gap, std::abs(st2->f_at(a, b, c) - levi_civita(int(a), int(b), int(c))));
          max_d = std::max(max_d, std::abs(st2->d_at(a, b, c)));
        }
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): f = epsilon", eps_gap, tol.abs_eps));
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): d vanishes identically", max_d, tol.abs_eps));
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): delta_coeff = 1/2", std::abs(st2->delta_coeff - 0.5), tol.abs_eps));

    const auto adj = adjoint_from_f(*st2);
    const auto& j4 = cat.at("J4");
    double gap = 0.0;
    for (std::size_t i = 1; i <= 3; ++i) gap = std::max(gap, frobenius_distance(adj[i], j4[i].block(0, 0, 3)));
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): adjoint from f = spatial block of J4", gap, tol.abs_eps));
  });

  guard(out, IdentityId::Ex7, "SU(3) structure", [&](Reports& r) {
    st3 = extract_structure(cat.at("SU3").members(), tol);
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(3): f reconstructs all 64 [J,J]", st3->commutator_residual, tol.abs_eps));
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(3): d reconstructs all 64 {J,J}", st3->anticommutator_residual, tol.abs_eps));
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(3): delta_coeff = 1/3", std::abs(st3->delta_coeff - 1.0 / 3.0), tol.abs_eps));
    const auto adj = adjoint_from_f(*st3);
    r.push_back(CheckReport::make(IdentityId::Ex7, "SU(3): 8x8 adjoint from f satisfies the f algebra",
                                  f_algebra_residual(adj.members(), *st3), tol.abs_eps));
  });

  if (st2 && st3) {
    const auto ob2 = boost_obstruction_report(*st2, tol);
    const auto ob3 = boost_obstruction_report(*st3, tol);
    // Indicator reports: residual 0 when the expected outcome holds, 1 otherwise.
    out.push_back(CheckReport::make(IdentityId::Ex7, "SU(2): boost construction unobstructed", ob2.obstructed ? 1.0 : 0.0, 0.5,
                                    std::nullopt, ob2.statement));
    out.push_back(CheckReport::make(IdentityId::Ex7, "SU(3): anticommutator d-terms obstruct the boost construction",
                                    ob3.obstructed ? 0.0 : 1.0, 0.5, std::nullopt, ob3.statement));

    std::ostringstream table;
    table << std::left << std::setw(8) << "group" << std::setw(14) << "f nonzeros" << std::setw(14) << "d nonzeros"
          << std::setw(14) << "delta_coeff" << "max|d|\n";
    for (const auto* st : {&*st2, &*st3}) {
      const auto ob = boost_obstruction_report(*st, tol);
      table << std::setw(8) << ("SU(" + std::to_string(st->n) + ")") << std::setw(14) << nonzeros(st->f, tol.abs_eps)
            << std::setw(14) << nonzeros(st->d, tol.abs_eps) << std::setw(14) << fmt_double(st->delta_coeff)
            << fmt_double(ob.max_abs_d) << "\n";
    }
    res.artifacts.push_back({"comparison", json{{"su2", to_json(ob2)}, {"su3", to_json(ob3)}}, table.str()});
    res.artifacts.push_back({"structure_su2", to_json(*st2), ""});
    res.artifacts.push_back({"structure_su3", to_json(*st3), ""});
    res.artifacts.push_back({"obstruction_su2", to_json(ob2), ob2.statement + "\n"});
    res.artifacts.push_back({"obstruction_su3", to_json(ob3), ob3.statement + "\n"});
  }
  return res;
}

SuiteResult run_exercises(const Catalog& cat, const SuiteConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  Reports out;

  guard(out, IdentityId::Ex1, "Ex1", [&](Reports& r) {
    auto rs = det_identity(cfg.trials, cfg.seed + 2, tol, IdentityId::Ex1);
    r.insert(r.end(), rs.begin(), rs.end());
  });

  guard(out, IdentityId::Ex2, "Ex2", [&](Reports& r) {
    auto rs = check_su2_fundamental(cat.at("J2"), tol);
    for (auto& rep : rs) {
      rep.label = "sigma/2: " + rep.label;
      rep.identity = IdentityId::Ex2;
    }
    r.insert(r.end(), rs.begin(), rs.end());
  });

  guard(out, IdentityId::Ex3, "Ex3", [&](Reports& r) {
    const auto built = rep22_v(VectorParams{{0.0, -2.0}, {0.0, 2.0}, 1.0});
    const auto& g = cat.at("gamma");
    double gap = 0.0;
    for (std::size_t mu = 1; mu <= 4; ++mu) gap = std::max(gap, frobenius_distance(built[mu], g[mu]));
    r.push_back(CheckReport::make(IdentityId::Ex3, "gamma^mu = V^mu with c+ = -2i, c- = +2i, alpha = 1", gap, tol.abs_eps));
  });

  guard(out, IdentityId::Ex4, "Ex4", [&](Reports& r) {
    const auto [plus, minus] = gamma5_projectors();
    Reports all;
    for (const auto& proj : {plus, minus}) {
      auto rs = check_poincare(cat.at("J22"), cat.at("K22"), project_vector(proj, cat.at("gamma")), 1.0, tol);
      all.insert(all.end(), rs.begin(), rs.end());
    }
    r.push_back(summarize(IdentityId::Ex4, "(1 +/- gamma5)/2 gamma^mu obey the Poincare algebra", all));
  });

  guard(out, IdentityId::Ex5, "Ex5", [&](Reports& r) {
    auto rs = check_poincare(cat.at("J5"), cat.at("K5"), cat.at("P5"), 1.0, tol);
    r.push_back(summarize(IdentityId::Ex5, "affine J5, K5, P5 obey the Poincare algebra", rs));

    SeededRng rng(cfg.seed + 5);
    ResidualTracker t;
    double square = 0.0;
    const auto& p5 = cat.at("P5");
    for (std::uint32_t n = 0; n < cfg.trials; ++n) {
      const FourVector a = rng.four_vector(10.0);
      const FourVector x = rng.four_vector(10.0);
      CMatrix arg(5);
      for (int mu = 1; mu <= 4; ++mu) arg += p5[mu] * (kI * kMetric[mu - 1] * a[mu]);
      square = std::max(square, frobenius_norm(arg * arg));
      const CMatrix e = mat_exp(arg, tol);
      std::array<CScalar, 5> v{x[1], x[2], x[3], x[4], 1.0};
      double err = 0.0;
      for (int row = 0; row < 5; ++row) {
        CScalar s{};
        for (int c = 0; c < 5; ++c) s += e(row, c) * v[c];
        const double want = row < 4 ? x[row + 1] + a[row + 1] : 1.0;
        err = std::max(err, std::abs(s - want));
      }
      t.observe(err, {static_cast<int>(n)}, "trial " + std::to_string(n));
    }
    r.push_back(t.report(IdentityId::Ex5, "exp(i a_mu P5^mu)(x,1) = (x+a,1)", tol.abs_eps));
    r.push_back(CheckReport::make(IdentityId::Ex5, "(i a_mu P5^mu)^2 = 0: the series stops after one term", square, tol.abs_eps));
  });

  auto ex6 = intertwining(cat, cfg);
  out.insert(out.end(), ex6.begin(), ex6.end());

  SuiteResult sun = run_sun(cat, cfg);
  out.push_back(summarize(IdentityId::Ex7, "SU(2) vs SU(3): f transfers, d obstructs boosts", sun.reports));
  return {std::move(out), std::move(sun.artifacts)};
}

}  // namespace

Perturbation Perturbation::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() < 4 || parts.size() > 6) throw ParseError("perturbation must be SET:member:row:col[:re[:im]]");
  auto to_size = [](const std::string& s) {
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("bad integer '" + s + "' in perturbation");
    return v;
  };
  auto to_double = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw ParseError("bad number '" + s + "' in perturbation");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad number '" + s + "' in perturbation");
    }
  };
  Perturbation p;
  p.set = parts[0];
  p.member = to_size(parts[1]);
  p.row = to_size(parts[2]);
  p.col = to_size(parts[3]);
  if (parts.size() >= 5) p.delta = CScalar(to_double(parts[4]), parts.size() == 6 ? to_double(parts[5]) : 0.0);
  return p;
}

void SuiteConfig::validate() const {
  if (trials < 1) throw ParamError("trials must be >= 1");
  if (alpha == 0.0 || !std::isfinite(alpha)) throw ParamError("alpha must be finite and nonzero");
  tol.validate();
}

const std::vector<std::string>& Catalog::names() {
  static const std::vector<std::string> kNames{"J2", "K2", "V2", "J22", "K22", "V22", "gamma", "P+",
                                               "P-", "J4", "K4", "J5", "K5", "P5", "SU3"};
  return kNames;
}

Catalog::Catalog(const SuiteConfig& cfg) {
  cfg.validate();
  params_ = VectorParams{{0.0, -2.0}, {0.0, 2.0}, cfg.alpha};

  SeededRng rng(cfg.seed);
  const CScalar c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  const CScalar c4{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  const auto [j22, k22] = rep22_jk();
  const auto affine = affine_generators();

  sets_.emplace("J2", j2());
  sets_.emplace("K2", k2());
  sets_.emplace("V2", v2(c, c4));
  sets_.emplace("J22", j22);
  sets_.emplace("K22", k22);
  sets_.emplace("V22", rep22_v(params_));
  sets_.emplace("gamma", gamma());
  sets_.emplace("P+", momentum({params_.c_plus, 0.0, params_.alpha}, MomentumBranch::Plus));
  sets_.emplace("P-", momentum({0.0, params_.c_minus, params_.alpha}, MomentumBranch::Minus));
  sets_.emplace("J4", build_j4());
  sets_.emplace("K4", build_k4());
  sets_.emplace("J5", affine.j5);
  sets_.emplace("K5", affine.k5);
  sets_.emplace("P5", affine.p5);
  sets_.emplace("SU3", sun_generators(3));

  if (cfg.perturb) {
    const auto& p = *cfg.perturb;
    auto it = sets_.find(p.set);
    if (it == sets_.end()) throw ParamError("perturbation names unknown set '" + p.set + "'");
    it->second = it->second.perturbed(p.member, p.row, p.col, p.delta);
  }
}

const GeneratorSet& Catalog::at(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw ParamError("unknown catalog set '" + name + "'");
  return it->second;
}

bool SuiteResult::all_passed() const { return lieforge::all_passed(reports); }

void SuiteResult::append(SuiteResult other) {
  reports.insert(reports.end(), other.reports.begin(), other.reports.end());
  for (auto& a : other.artifacts) artifacts.push_back(std::move(a));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames{"verify", "transfer", "invariants", "sun", "exercises", "all"};
  return kNames;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg) {
  const Catalog cat(cfg);
  if (name == "verify") return run_verify(cat, cfg);
  if (name == "transfer") return run_transfer(cat, cfg);
  if (name == "invariants") return run_invariants(cat, cfg);
  if (name == "sun") return run_sun(cat, cfg);
  if (name == "exercises") return run_exercises(cat, cfg);
  if (name == "all") {
    SuiteResult all;
    for (const char* s : {"verify", "transfer", "invariants", "sun", "exercises"}) {
      SuiteResult part = run_suite(s, cfg);
      for (auto& a : part.artifacts) a.name = std::string(s) + "." + a.name;
      all.append(std::move(part));
    }
    return all;
  }
  throw ParamError("unknown suite '" + std::string(name) + "'");
}

std::string format_matrix(const CMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.dim(); ++c) out += (c ? ", " : "") + fmt_scalar(m(r, c));
    out += "]";
  }
  return out + "]";
}

}  // namespace lieforge
