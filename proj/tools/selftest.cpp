// Seeded property checks behind `spinlift selftest`. Each check draws from
// its own generator (seed + check index), so results do not depend on the
// order in which the parallel tasks finish.

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "cli.hpp"
#include "spinlift/spinlift.hpp"

namespace spinlift::cli {

namespace {

struct CheckOutcome {
  std::string name;
  double max_defect = 0.0;
  double tolerance = 0.0;
};

struct CheckSpec {
  std::string name;
  double tolerance;
  std::function<double(Sampler&, const Metric&, int cases, double scale)> body;
};

template <class Derived>
double max_entry(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

double rel(double defect, double scale) { return defect / std::max(1.0, scale); }

template <class Fn>
double both_reps(const Metric& g, Fn&& fn) {
  return std::max(fn(GammaRep(g)), fn(RegularRep(g)));
}

double check_decomposition(Sampler& s, const Metric& g, int cases, double scale) {
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const Bivector l = s.bivector(g, scale);
    if (is_simple(l)) continue;
    const OrthogonalDecomposition d = orthogonal_decompose(l);
    const double n = l.norm();
    const Mat4& p = d.plus.matrix();
    const Mat4& m = d.minus.matrix();
    worst = std::max({worst, rel(max_entry(p * m), n * n), rel(max_entry(m * p), n * n),
                      rel(max_entry(p + m - l.matrix()), n),
                      rel(std::abs(det_bivector(d.plus)), n * n * n * n),
                      rel(std::abs(det_bivector(d.minus)), n * n * n * n),
                      rel(std::abs(tr2(d.plus) + d.mu.mu_plus), n * n),
                      rel(std::abs(tr2(d.minus) + d.mu.mu_minus), n * n)});
  }
  return worst;
}

double check_sigma_square(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const Bivector l = s.simple_bivector(g, scale);
      const auto sigma = spin_rep(rep, l);
      worst = std::max(worst, rel(max_entry(sigma * sigma + 0.25 * tr2(l) * rep.identity()),
                                  l.norm() * l.norm()));
    }
    return worst;
  });
}

double check_spin_decompose(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const Bivector l = s.bivector(g, scale);
      if (is_simple(l)) continue;
      const OrthogonalDecomposition d = orthogonal_decompose(l);
      const auto [sp, sm] = spin_decompose(spin_rep(rep, l), d.mu);
      const double n = l.norm();
      worst = std::max({worst, rel(max_entry(sp - spin_rep(rep, d.plus)), n),
                        rel(max_entry(sm - spin_rep(rep, d.minus)), n)});
    }
    return worst;
  });
}

double check_cross_product(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const Bivector l = s.bivector(g, scale);
      if (is_simple(l)) continue;
      const OrthogonalDecomposition d = orthogonal_decompose(l);
      const auto sp = spin_rep(rep, d.plus);
      const auto sm = spin_rep(rep, d.minus);
      const auto expected = spin_cross_product(spin_rep(rep, l), tr2(l), rep);
      const double n2 = l.norm() * l.norm();
      worst = std::max({worst, rel(max_entry(sp * sm - expected), n2), rel(max_entry(sm * sp - expected), n2)});
    }
    return worst;
  });
}

double check_recovery(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const Bivector l = (i % 2 == 0) ? s.bivector(g, scale) : s.simple_bivector(g, scale);
      const RecoveredInvariants r = recover_invariants(spin_rep(rep, l), rep);
      const double n = l.norm();
      worst = std::max({worst, rel(std::abs(r.tr2 - tr2(l)), n * n),
                        rel(std::abs(r.det - det_bivector(l)), n * n * n * n)});
    }
    return worst;
  });
}

double check_exponentials(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const Bivector l = s.bivector(g, scale);
      if (is_simple(l)) continue;
      const auto series = exp_series(spin_rep(rep, l));
      const double n = max_entry(series);
      const auto factored = exp_spin_factored(l, rep);
      const auto polynomial = exp_spin_polynomial(l, rep);
      worst = std::max({worst, rel(max_entry(factored - series), n), rel(max_entry(polynomial - series), n),
                        rel(max_entry(factored - polynomial), n)});
    }
    return worst;
  });
}

double check_log(Sampler& s, const Metric& g, int cases, double scale) {
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const LorentzTransformation lam(g, exp_series(s.simple_bivector(g, scale).matrix()));
    if (routes_to_traceless(lam)) continue;
    const SimpleLog log = log_simple(lam);
    worst = std::max(worst, rel(max_entry(exp_series(log.generator.matrix()) - lam.matrix()), lam.norm()));
  }
  return worst;
}

double check_factor(Sampler& s, const Metric& g, int cases, double scale) {
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const LorentzTransformation lam = s.transformation(g, scale);
    const FactorPair f = factor_transform(lam);
    const Mat4& p = f.lambda_plus.matrix();
    const Mat4& m = f.lambda_minus.matrix();
    const double n = lam.norm();
    auto simplicity = [](const LorentzTransformation& x) {
      const double t2 = tr2_transform(x);
      return std::abs(t2 - 2.0 * (x.trace() - 1.0)) / std::max({1.0, t2, x.trace()});
    };
    worst = std::max({worst, rel(max_entry(p * m - lam.matrix()), n), rel(max_entry(p * m - m * p), n * n),
                      simplicity(f.lambda_plus), simplicity(f.lambda_minus)});
  }
  return worst;
}

double check_lift(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const LorentzTransformation lam = s.transformation(g, scale);
      worst = std::max(worst, rel(intertwining_defect(lift(lam, rep).value, lam.matrix(), rep), lam.norm()));
    }
    return worst;
  });
}

double check_homomorphism(Sampler& s, const Metric& g, int cases, double scale) {
  return both_reps(g, [&](const auto& rep) {
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
      const LorentzTransformation a = s.transformation(g, scale);
      const LorentzTransformation b = s.transformation(g, scale);
      const LorentzTransformation ab = a * b;
      const auto lhs = normalize_sign(lift(ab, rep).value);
      const auto rhs = normalize_sign((lift(a, rep).value * lift(b, rep).value).eval());
      worst = std::max(worst, rel(max_entry(lhs - rhs), max_entry(rhs)));
    }
    return worst;
  });
}

const std::vector<CheckSpec>& checks() {
  static const std::vector<CheckSpec> all = {
      {"orthogonal_decomposition", 1e-8, check_decomposition},
      {"sigma_square_simple", 1e-10, check_sigma_square},
      {"spin_decompose", 1e-9, check_spin_decompose},
      {"spin_cross_product", 1e-9, check_cross_product},
      {"invariant_recovery", 1e-8, check_recovery},
      {"exponential_agreement", 1e-9, check_exponentials},
      {"log_roundtrip", 1e-8, check_log},
      {"factorization", 1e-8, check_factor},
      {"lift_intertwining", 1e-7, check_lift},
      {"projective_homomorphism", 1e-7, check_homomorphism},
  };
  return all;
}

}  // namespace

Json run_selftest(const JobRequest& request) {
  const Metric g = Metric::make(request.metric);
  const auto& specs = checks();

  std::vector<std::future<CheckOutcome>> futures;
  futures.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    futures.push_back(std::async(std::launch::async, [&, i] {
      Sampler sampler(request.seed + i);
      return CheckOutcome{specs[i].name, specs[i].body(sampler, g, request.cases, request.scale),
                          specs[i].tolerance};
    }));
  }

  Json doc;
  doc["command"] = to_string(Command::kSelftest);
  doc["metric"] = signature_tag(g.signature());
  doc["seed"] = request.seed;
  doc["scale"] = request.scale;
  doc["cases"] = request.cases;
  Json list = Json::array();
  bool all_passed = true;
  for (auto& f : futures) {
    const CheckOutcome o = f.get();
    const bool passed = o.max_defect <= o.tolerance;
    all_passed = all_passed && passed;
    list.push_back({{"name", o.name}, {"max_defect", o.max_defect}, {"tolerance", o.tolerance}, {"passed", passed}});
  }
  doc["checks"] = list;
  doc["passed"] = all_passed;
  return doc;
}

}  // namespace spinlift::cli
