#include "cli.hpp"

#include <cmath>
#include <complex>

#include "spinlift/spinlift.hpp"

namespace spinlift::cli {

namespace {

Json matrix_json(const Mat4& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Derived>
Json rep_matrix_json(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
        row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
      } else {
        row.push_back(m(r, c));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Derived>
double max_entry(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Calls fn with the concrete representation named by the request.
template <class Fn>
Json with_rep(const JobRequest& request, const Metric& g, Fn&& fn) {
  if (request.rep == RepKind::kRegular) return fn(RegularRep(g));
  return fn(GammaRep(g));
}

Json header(const JobRequest& request, const Metric& g) {
  Json doc;
  doc["command"] = to_string(request.command);
  doc["metric"] = {{"signature", signature_tag(g.signature())}, {"matrix", matrix_json(g.matrix())}};
  doc["rep"] = to_string(request.rep);
  doc["tol"] = request.tol;
  doc["input"] = matrix_json(request.matrix);
  return doc;
}

Json mu_json(const MuPair& mu) { return {{"mu_plus", mu.mu_plus}, {"mu_minus", mu.mu_minus}}; }

Json run_decompose(const JobRequest& request, const Metric& g) {
  const Bivector l(g, request.matrix);
  Json doc = header(request, g);
  const OrthogonalDecomposition d = orthogonal_decompose(l);
  const double n = std::max(1.0, l.norm());
  doc["branch"] = "nonsimple/decomposed";
  doc["invariants"] = {{"tr2", tr2(l)},
                       {"det", det_bivector(l)},
                       {"mu_plus", d.mu.mu_plus},
                       {"mu_minus", d.mu.mu_minus},
                       {"simple", is_simple(l, request.tol)}};
  doc["result"] = {{"L_plus", matrix_json(d.plus.matrix())}, {"L_minus", matrix_json(d.minus.matrix())}};

  const double spin_defect = with_rep(request, g, [&](const auto& rep) {
    const auto [sp, sm] = spin_decompose(spin_rep(rep, l), d.mu);
    return Json(std::max(max_entry(sp - spin_rep(rep, d.plus)), max_entry(sm - spin_rep(rep, d.minus))));
  });
  doc["diagnostics"] = {
      {"reconstruction_defect", max_entry(d.plus.matrix() + d.minus.matrix() - l.matrix()) / n},
      {"annihilation_defect", std::max(max_entry(d.plus.matrix() * d.minus.matrix()),
                                       max_entry(d.minus.matrix() * d.plus.matrix())) /
                                  (n * n)},
      {"det_plus", det_bivector(d.plus)},
      {"det_minus", det_bivector(d.minus)},
      {"tr2_plus_defect", tr2(d.plus) + d.mu.mu_plus},
      {"tr2_minus_defect", tr2(d.minus) + d.mu.mu_minus},
      {"spin_decompose_defect", spin_defect},
  };
  return doc;
}

Json run_exp_spin(const JobRequest& request, const Metric& g) {
  const Bivector l(g, request.matrix);
  Json doc = header(request, g);
  const MuPair mu = mu_roots(l);
  return with_rep(request, g, [&](const auto& rep) {
    const auto result = exp_spin(l, rep);
    doc["branch"] = to_string(result.branch);
    doc["near_degenerate"] = result.near_degenerate;
    Json inv = mu_json(mu);
    inv["tr2"] = tr2(l);
    inv["det"] = det_bivector(l);
    inv["simple"] = is_simple(l, request.tol);
    doc["invariants"] = inv;
    if (result.branch == ExpBranch::kNonsimplePolynomial) {
      const ExpCoefficients c = exp_coefficients(mu);
      doc["coefficients"] = {{"theta_plus", c.theta_plus},     {"theta_minus", c.theta_minus},
                             {"c_bar_plus", c.c_bar_plus},     {"c_bar_minus", c.c_bar_minus},
                             {"s_bar_plus", c.s_bar_plus},     {"s_bar_minus", c.s_bar_minus},
                             {"N", c.n},                       {"alpha", c.alpha}};
    } else if (result.branch != ExpBranch::kSeriesFallback) {
      const SimpleExpCoefficients c = simple_exp_coefficients(tr2(l));
      doc["coefficients"] = {{"c_bar", c.c_bar}, {"s_bar", c.s_bar}};
    }
    doc["result"] = {{"exp_sigma", rep_matrix_json(result.value)}};
    doc["diagnostics"] = {
        {"series_defect", max_entry(result.value - exp_series(spin_rep(rep, l)))},
        {"intertwining_defect", intertwining_defect(result.value, exp_series(l.matrix()), rep)},
    };
    return doc;
  });
}

Json run_log(const JobRequest& request, const Metric& g) {
  const LorentzTransformation lam(g, request.matrix);
  Json doc = header(request, g);
  const TransformLog log = log_transform(lam);
  doc["branch"] = to_string(log.branch);
  doc["simple"] = log.simple;
  Json inv = {{"trace", lam.trace()}, {"tr2", tr2_transform(lam)}, {"tr2_L", tr2(log.generator)}};
  if (log.simple && log.branch != LogBranch::kTraceless) {
    const SimpleLog s = log_simple(lam);
    inv["mu"] = s.mu;
    inv["k"] = s.k;
  }
  doc["invariants"] = inv;
  doc["result"] = {{"L", matrix_json(log.generator.matrix())}};
  doc["diagnostics"] = {
      {"roundtrip_defect", max_entry(exp_series(log.generator.matrix()) - lam.matrix())}};
  return doc;
}

Json run_factor(const JobRequest& request, const Metric& g) {
  const LorentzTransformation lam(g, request.matrix);
  Json doc = header(request, g);
  const FactorPair f = factor_transform(lam);
  const Mat4& p = f.lambda_plus.matrix();
  const Mat4& m = f.lambda_minus.matrix();
  const double t1 = lam.trace();
  const double t2 = tr2_transform(lam);
  doc["branch"] = is_simple_transform(lam, request.tol) ? "simple/factored" : "nonsimple/factored";
  doc["invariants"] = {{"trace", t1},
                       {"tr2", t2},
                       {"delta", f.delta},
                       {"c_plus", f.c_plus},
                       {"c_minus", f.c_minus},
                       {"simple", is_simple_transform(lam, request.tol)}};
  doc["result"] = {{"lambda_plus", matrix_json(p)}, {"lambda_minus", matrix_json(m)}};
  auto simplicity = [](const LorentzTransformation& x) {
    return std::abs(tr2_transform(x) - 2.0 * (x.trace() - 1.0));
  };
  doc["diagnostics"] = {
      {"reconstruction_defect", max_entry(p * m - lam.matrix())},
      {"commutation_defect", max_entry(p * m - m * p)},
      {"simplicity_defect_plus", simplicity(f.lambda_plus)},
      {"simplicity_defect_minus", simplicity(f.lambda_minus)},
      {"trace_identity_defect", std::abs(t1 - 2.0 * (f.c_plus + f.c_minus))},
      {"tr2_identity_defect", std::abs(t2 - (4.0 * f.c_plus * f.c_minus + 2.0))},
  };
  return doc;
}

Json run_lift(const JobRequest& request, const Metric& g) {
  const LorentzTransformation lam(g, request.matrix);
  Json doc = header(request, g);
  return with_rep(request, g, [&](const auto& rep) {
    const auto result = lift(lam, rep);
    doc["branch"] = to_string(result.branch);
    doc["invariants"] = {{"trace", lam.trace()},
                         {"tr2", tr2_transform(lam)},
                         {"denominator", lift_denominator(lam)},
                         {"simple", is_simple_transform(lam, request.tol)}};
    doc["result"] = {{"sigma", rep_matrix_json(normalize_sign(result.value))}};
    doc["diagnostics"] = {{"intertwining_defect", intertwining_defect(result.value, lam.matrix(), rep)}};
    return doc;
  });
}

Json run_invariants(const JobRequest& request, const Metric& g) {
  const Bivector l(g, request.matrix);
  Json doc = header(request, g);
  return with_rep(request, g, [&](const auto& rep) {
    const RecoveredInvariants r = recover_invariants(spin_rep(rep, l), rep);
    const double t = tr2(l);
    const double d = det_bivector(l);
    doc["invariants"] = {{"tr2", t},
                         {"det", d},
                         {"recovered_tr2", r.tr2},
                         {"recovered_det", r.det},
                         {"identity_trace", rep.identity_trace()}};
    doc["diagnostics"] = {{"tr2_defect", std::abs(r.tr2 - t)}, {"det_defect", std::abs(r.det - d)}};
    return doc;
  });
}

Mat4 parse_matrix(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("\"matrix\" must be a 4x4 array of numbers");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != 4) throw InputError("\"matrix\" must be a 4x4 array of numbers");
    for (int c = 0; c < 4; ++c) {
      if (!row[c].is_number()) throw InputError("\"matrix\" entries must be numbers");
      m(r, c) = row[c].get<double>();
      if (!std::isfinite(m(r, c))) throw InputError("\"matrix\" entries must be finite");
    }
  }
  return m;
}

template <class T>
T field(const Json& doc, const char* key, const char* kind, bool (Json::*check)() const noexcept) {
  const Json& j = doc.at(key);
  if (!(j.*check)()) throw InputError(std::string("\"") + key + "\" must be " + kind);
  return j.get<T>();
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kDecompose: return "decompose";
    case Command::kExpSpin: return "exp-spin";
    case Command::kLog: return "log";
    case Command::kFactor: return "factor";
    case Command::kLift: return "lift";
    case Command::kInvariants: return "invariants";
    case Command::kSelftest: return "selftest";
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kDecompose, Command::kExpSpin, Command::kLog, Command::kFactor,
                    Command::kLift, Command::kInvariants, Command::kSelftest}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

JobRequest parse_request(Command command, const Json& doc, const RequestOverrides& overrides) {
  if (!doc.is_null() && !doc.is_object()) throw InputError("request must be a JSON object");
  const Json obj = doc.is_null() ? Json::object() : doc;

  JobRequest request;
  request.command = command;
  if (obj.contains("command")) {
    if (!obj["command"].is_string() || parse_command(obj["command"].get<std::string>()) != command) {
      throw InputError("request \"command\" does not match the invoked command");
    }
  }
  if (obj.contains("metric")) {
    const auto sig = obj["metric"].is_string() ? parse_signature(obj["metric"].get<std::string>()) : std::nullopt;
    if (!sig) throw InputError("\"metric\" must be \"pmmm\" or \"mppp\"");
    request.metric = *sig;
  }
  if (obj.contains("rep")) {
    const std::string rep = obj["rep"].is_string() ? obj["rep"].get<std::string>() : "";
    if (rep == "gamma") {
      request.rep = RepKind::kGamma;
    } else if (rep == "regular") {
      request.rep = RepKind::kRegular;
    } else {
      throw InputError("\"rep\" must be \"gamma\" or \"regular\"");
    }
  }
  if (obj.contains("tol")) request.tol = field<double>(obj, "tol", "a number", &Json::is_number);
  if (obj.contains("seed")) {
    const Json& seed = obj.at("seed");
    // Documents built in code store 3 as a signed integer.
    if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
      throw InputError("\"seed\" must be an unsigned integer");
    }
    request.seed = seed.get<std::uint64_t>();
  }
  if (obj.contains("scale")) request.scale = field<double>(obj, "scale", "a number", &Json::is_number);
  if (obj.contains("cases")) request.cases = field<int>(obj, "cases", "an integer", &Json::is_number_integer);

  if (overrides.metric) request.metric = *overrides.metric;
  if (overrides.rep) request.rep = *overrides.rep;
  if (overrides.tol) request.tol = *overrides.tol;
  if (overrides.seed) request.seed = *overrides.seed;
  if (overrides.scale) request.scale = *overrides.scale;
  if (overrides.cases) request.cases = *overrides.cases;

  if (!(request.tol > 0.0)) throw InputError("\"tol\" must be positive");
  if (!(request.scale >= 0.0) || !std::isfinite(request.scale)) throw InputError("\"scale\" must be non-negative");
  if (request.cases <= 0) throw InputError("\"cases\" must be positive");

  if (command != Command::kSelftest) {
    if (!obj.contains("matrix")) throw InputError("request is missing \"matrix\"");
    request.matrix = parse_matrix(obj["matrix"]);
  }
  return request;
}

Json run(const JobRequest& request) {
  const Metric g = Metric::make(request.metric);
  switch (request.command) {
    case Command::kDecompose: return run_decompose(request, g);
    case Command::kExpSpin: return run_exp_spin(request, g);
    case Command::kLog: return run_log(request, g);
    case Command::kFactor: return run_factor(request, g);
    case Command::kLift: return run_lift(request, g);
    case Command::kInvariants: return run_invariants(request, g);
    case Command::kSelftest: return run_selftest(request);
  }
  throw InputError("unknown command");
}

Json error_document(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace spinlift::cli
