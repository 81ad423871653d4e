#include "potlab/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "potlab/capacity.hpp"
#include "potlab/errors.hpp"
#include "potlab/harmonic1d.hpp"
#include "potlab/harmonicnd.hpp"
#include "potlab/quasi1d.hpp"
#include "potlab/verdict.hpp"
#include "potlab/weights1d.hpp"

namespace potlab {

using nlohmann::json;

std::string csv_num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") != std::string::npos) {
      row += '"';
      for (char c : f) {
        if (c == '"') row += '"';
        row += c;
      }
      row += '"';
    } else {
      row += f;
    }
  }
  row += "\r\n";
  return row;
}

namespace {

double parse_real(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(what + ": cannot parse real value '" + s + "'");
  }
  throw InputError(what + ": expected a number or decimal string");
}

Interval parse_interval(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi")) {
    throw InputError(what + ": expected {lo, hi}");
  }
  return {parse_real(j["lo"], what + ".lo"), parse_real(j["hi"], what + ".hi")};
}

OpenSet1D parse_omega_1d(const json& sc) {
  if (!sc.contains("omega") || !sc["omega"].is_array()) {
    throw InputError("omega: expected an array of {lo, hi} components");
  }
  std::vector<Interval> comps;
  for (const auto& c : sc["omega"]) comps.push_back(parse_interval(c, "omega"));
  return OpenSet1D::make(std::move(comps));
}

RelClosed1D parse_e_1d(const OpenSet1D& omega, const json& sc) {
  std::vector<std::vector<ClosedPiece>> pieces(omega.components.size());
  if (sc.contains("e")) {
    if (!sc["e"].is_array()) throw InputError("e: expected an array of {lo, hi} pieces");
    for (const auto& pj : sc["e"]) {
      const Interval piece = parse_interval(pj, "e");
      bool placed = false;
      for (std::size_t i = 0; i < omega.components.size(); ++i) {
        const Interval& I = omega.components[i];
        if (piece.hi > I.lo && piece.lo < I.hi) {
          pieces[i].push_back({piece.lo, piece.hi});
          placed = true;
          break;
        }
      }
      if (!placed) throw InputError("e: piece does not meet any component of omega");
    }
  }
  return RelClosed1D::make(omega, std::move(pieces));
}

std::string resolve_weight_spec(std::string spec, const std::string& base_dir) {
  const std::string prefix = "table ";
  if (spec.rfind(prefix, 0) == 0) {
    std::string path = spec.substr(prefix.size());
    if (!path.empty() && path[0] != '/') spec = prefix + base_dir + "/" + path;
  }
  return spec;
}

Weight1D parse_weight_1d(const json& sc, double p, const std::string& base_dir) {
  const std::string spec = sc.value("weight", std::string("const 1"));
  return Weight1D::parse(resolve_weight_spec(spec, base_dir), Exponent(p));
}

Sdf sdf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("region: expected {kind, ...}");
  const std::string kind = j["kind"];
  if (kind == "disc" || kind == "ball") {
    return sdf_disc(j.at("center").get<std::vector<double>>(), j.at("radius").get<double>());
  }
  if (kind == "box") {
    return sdf_box(j.at("lo").get<std::vector<double>>(), j.at("hi").get<std::vector<double>>());
  }
  if (kind == "all") return sdf_all();
  if (kind == "union") return sdf_union(sdf_from_json(j.at("a")), sdf_from_json(j.at("b")));
  if (kind == "difference") {
    return sdf_difference(sdf_from_json(j.at("a")), sdf_from_json(j.at("b")));
  }
  throw InputError("region: unknown kind '" + kind + "'");
}

WeightNd weight_nd_from_json(const json& j) {
  if (j.is_null()) return weight_const_nd(1.0);
  const std::string kind = j.value("kind", std::string("const"));
  if (kind == "const") return weight_const_nd(j.value("value", 1.0));
  if (kind == "radial_pow") return weight_radial_pow_nd(j.at("alpha").get<double>());
  throw InputError("weight: unknown kind '" + kind + "'");
}

BoundaryFn boundary_from_json(const json& j) {
  if (j.is_null()) {
    return [](std::span<const double>) { return 0.0; };
  }
  const std::string kind = j.value("kind", std::string("const"));
  if (kind == "const") {
    const double c = j.value("value", 0.0);
    return [c](std::span<const double>) { return c; };
  }
  if (kind == "coordinate") {
    const int axis = j.value("axis", 0);
    return [axis](std::span<const double> x) { return x[axis]; };
  }
  throw InputError("boundary: unknown kind '" + kind + "'");
}

SetDesc setdesc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("set: expected {kind, ...}");
  const std::string kind = j["kind"];
  if (kind == "empty") return SetDesc::empty();
  if (kind == "point") return SetDesc::point(j.at("x").get<std::vector<double>>());
  if (kind == "finite-points") {
    return SetDesc::finite_points(j.at("points").get<std::vector<std::vector<double>>>());
  }
  if (kind == "countable") return SetDesc::countable_points(j.value("label", std::string()));
  if (kind == "ball") {
    return SetDesc::closed_ball(j.at("center").get<std::vector<double>>(),
                                j.at("radius").get<double>());
  }
  if (kind == "box") {
    return SetDesc::closed_box(j.at("lo").get<std::vector<double>>(),
                               j.at("hi").get<std::vector<double>>());
  }
  if (kind == "whole-space") return SetDesc::whole_space();
  if (kind == "union") {
    std::vector<SetDesc> parts;
    for (const auto& pj : j.at("parts")) parts.push_back(setdesc_from_json(pj));
    return SetDesc::union_of(std::move(parts));
  }
  throw InputError("set: unknown kind '" + kind + "'");
}

std::optional<CapacityFact> fact_from_json(const json& sc, const char* field) {
  if (!sc.contains("facts") || !sc["facts"].contains(field)) return std::nullopt;
  const std::string s = sc["facts"][field];
  if (s == "zero") return CapacityFact::declared_zero();
  if (s == "positive") return CapacityFact::declared_positive();
  if (s == "trend-zero") return CapacityFact::numeric(CapTrend::TrendZero);
  if (s == "trend-positive") return CapacityFact::numeric(CapTrend::TrendPositive);
  throw InputError(std::string("facts.") + field + ": unknown status '" + s + "'");
}

const char* status_name(Removability1D s) {
  switch (s) {
    case Removability1D::Removable: return "removable";
    case Removability1D::WeaklyRemovableOnly: return "weakly-removable-only";
    case Removability1D::NonRemovableDisconnected: return "non-removable-disconnected";
    case Removability1D::NonRemovableUnbounded: return "non-removable-unbounded";
  }
  return "unknown";
}

json verdict1d_json(const Verdict1D& v) {
  json out;
  out["removable"] = v.status == Removability1D::Removable;
  out["status"] = status_name(v.status);
  out["clause"] = v.clause;
  if (v.constant) out["C"] = std::isinf(*v.constant) ? json("inf") : json(*v.constant);
  return out;
}

std::string witness_csv(const Verdict1D& v) {
  std::string csv = csv_row({"x", "witness"});
  if (!v.witness) return csv;
  for (const auto& I : v.witness->domain.components) {
    const double lo = std::isfinite(I.lo) ? I.lo : std::min(I.hi - 10.0, -10.0);
    const double hi = std::isfinite(I.hi) ? I.hi : std::max(I.lo + 10.0, 10.0);
    const int steps = 32;
    for (int k = 1; k < steps; ++k) {
      const double x = lo + (hi - lo) * k / steps;
      if (!I.contains(x)) continue;
      csv += csv_row({csv_num(x), csv_num(v.witness->eval(x))});
    }
  }
  return csv;
}

// Sample abscissae for fitting/printing on a possibly unbounded interval.
std::pair<double, double> fit_points(const Interval& I) {
  if (I.bounded()) return {I.lo + I.length() / 3.0, I.lo + 2.0 * I.length() / 3.0};
  if (std::isfinite(I.lo)) return {I.lo + 1.0, I.lo + 2.0};
  if (std::isfinite(I.hi)) return {I.hi - 2.0, I.hi - 1.0};
  return {0.0, 1.0};
}

ScenarioResult run_decide1d(const json& sc, const std::string& base_dir) {
  const double p = parse_real(sc.at("p"), "p");
  const Weight1D w = parse_weight_1d(sc, p, base_dir);
  const OpenSet1D omega = parse_omega_1d(sc);
  const RelClosed1D e = parse_e_1d(omega, sc);
  const Verdict1D v = decide_removable_1d(omega, e, w);
  ScenarioResult res;
  res.verdict = verdict1d_json(v);
  res.csv = witness_csv(v);
  return res;
}

ScenarioResult run_extend1d(const json& sc, const std::string& base_dir) {
  const double p = parse_real(sc.at("p"), "p");
  const Weight1D w = parse_weight_1d(sc, p, base_dir);
  const OpenSet1D omega = parse_omega_1d(sc);
  const RelClosed1D e = parse_e_1d(omega, sc);
  const double slope = sc.value("u", json::object()).value("slope", 1.0);
  const double intercept = sc.value("u", json::object()).value("intercept", 0.0);
  auto lin = [&](double x) { return slope * x + intercept; };

  PiecewiseHarmonic1D u;
  std::vector<Interval> rest_all;
  for (std::size_t i = 0; i < omega.components.size(); ++i) {
    for (const Interval& r : component_minus(omega.components[i], e.pieces[i])) {
      rest_all.push_back(r);
      const auto [x1, x2] = fit_points(r);
      u.pieces.push_back(fit_two_points(w, r, {x1, lin(x1)}, {x2, lin(x2)}));
    }
  }
  u.domain = OpenSet1D::make(rest_all);

  const PiecewiseHarmonic1D ext = weak_extend(omega, e, u);
  std::string csv = csv_row({"x", "u_extended"});
  for (const Interval& I : ext.domain.components) {
    if (!I.bounded()) continue;
    const int steps = 100;
    for (int k = 1; k < steps; ++k) {
      const double x = I.lo + I.length() * k / steps;
      csv += csv_row({csv_num(x), csv_num(ext.eval(x))});
    }
  }
  ScenarioResult res;
  res.verdict = {{"status", "extended"},
                 {"components", ext.pieces.size()}};
  res.csv = std::move(csv);
  return res;
}

ScenarioResult run_quasi1d(const json& sc, const std::string&) {
  const double p = parse_real(sc.at("p"), "p");
  const double q = sc.value("Q", 1.0);
  const OpenSet1D omega = parse_omega_1d(sc);
  const RelClosed1D e = parse_e_1d(omega, sc);
  const double slope = sc.value("u", json::object()).value("slope", 1.0);
  const double intercept = sc.value("u", json::object()).value("intercept", 0.0);

  std::size_t rest_count = 0;
  for (std::size_t i = 0; i < omega.components.size(); ++i) {
    rest_count += component_minus(omega.components[i], e.pieces[i]).size();
  }
  std::vector<Fn1D> u(rest_count,
                      [slope, intercept](double x) { return slope * x + intercept; });
  const QuasiExtension ext = extend_quasi_1d(omega, e, u, QuasiConstant(q), Exponent(p));

  std::string csv = csv_row({"x", "U"});
  for (const Interval& I : ext.domain.components) {
    if (!I.bounded()) continue;
    const int steps = 100;
    for (int k = 1; k < steps; ++k) {
      const double x = I.lo + I.length() * k / steps;
      csv += csv_row({csv_num(x), csv_num(ext.U(x))});
    }
  }
  ScenarioResult res;
  res.verdict = {{"Qprime", ext.Qprime}, {"reflections_used", ext.reflections_used}};
  res.csv = std::move(csv);
  return res;
}

ScenarioResult run_fq(const json& sc, const std::string&) {
  const double p = parse_real(sc.at("p"), "p");
  const double q = sc.value("Q", 1.0);
  std::string csv = csv_row({"x", "bound", "infeasible"});
  json rows = json::array();
  for (const auto& xj : sc.at("xs")) {
    const double x = parse_real(xj, "xs");
    const FqResult r = f_q_bound(q, p, x);
    csv += csv_row({csv_num(x), r.infeasible ? "" : csv_num(r.bound),
                    r.infeasible ? "true" : "false"});
    rows.push_back({{"x", x}, {"bound", r.bound}, {"infeasible", r.infeasible}});
  }
  ScenarioResult res;
  res.verdict = {{"Q", q}, {"p", p}, {"results", rows}};
  res.csv = std::move(csv);
  return res;
}

CondenserSpec condenser_from_json(const json& sc) {
  CondenserSpec spec;
  spec.dim = sc.value("dim", 2);
  spec.lo = sc.at("lo").get<std::vector<double>>();
  spec.hi = sc.at("hi").get<std::vector<double>>();
  spec.omega = sdf_from_json(sc.at("omega"));
  if (sc.contains("plate")) spec.plate = sdf_from_json(sc["plate"]);
  if (sc.contains("plate_points")) {
    spec.plate_points = sc["plate_points"].get<std::vector<std::vector<double>>>();
  }
  spec.weight = weight_nd_from_json(sc.value("weight", json()));
  return spec;
}

ScenarioResult run_capacity(const json& sc, const std::string&) {
  const double p = parse_real(sc.at("p"), "p");
  const CondenserSpec spec = condenser_from_json(sc);
  std::vector<double> hs;
  for (const auto& hj : sc.at("hs")) hs.push_back(parse_real(hj, "hs"));
  const CapacityEstimate est = capacity_refinement(spec, hs, p);

  std::string csv = csv_row({"h", "capacity"});
  for (const auto& [h, v] : est.refinement_chain) {
    csv += csv_row({csv_num(h), csv_num(v)});
  }
  ScenarioResult res;
  res.verdict = {{"capacity", est.value}, {"h", est.h}, {"iterations", est.iterations}};
  if (est.refinement_chain.size() >= 3) {
    const CapTrend t = null_capacity_trend(est.refinement_chain);
    res.verdict["trend"] = t == CapTrend::TrendZero       ? "zero"
                           : t == CapTrend::TrendPositive ? "positive"
                                                          : "inconclusive";
  }
  res.csv = std::move(csv);
  return res;
}

ScenarioResult run_parabolic(const json& sc, const std::string&) {
  json cases = sc.contains("cases") ? sc["cases"] : json::array({sc});
  std::string csv = csv_row({"d", "p", "parabolic"});
  json rows = json::array();
  for (const auto& c : cases) {
    const double p = parse_real(c.at("p"), "p");
    const double d = parse_real(c.at("d"), "d");
    const double coef = c.value("c", 1.0);
    const Parabolicity r = parabolicity(BallGrowth::power_law(coef, d), p);
    const std::string tag = r == Parabolicity::Parabolic    ? "true"
                            : r == Parabolicity::Hyperbolic ? "false"
                                                            : "inconclusive";
    csv += csv_row({csv_num(d), csv_num(p), tag});
    rows.push_back({{"d", d}, {"p", p}, {"parabolic", tag}});
  }
  ScenarioResult res;
  res.verdict = {{"results", rows}};
  if (rows.size() == 1) res.verdict["parabolic"] = rows[0]["parabolic"] == "true";
  res.csv = std::move(csv);
  return res;
}

GridDomain grid_from_json(const json& sc) {
  return GridDomain(sc.value("dim", 2), sc.at("lo").get<std::vector<double>>(),
                    sc.at("hi").get<std::vector<double>>(),
                    parse_real(sc.at("h"), "h"), sdf_from_json(sc.at("omega")),
                    weight_nd_from_json(sc.value("weight", json())),
                    boundary_from_json(sc.value("boundary", json())));
}

ScenarioResult run_solve(const json& sc, const std::string&) {
  const double p = parse_real(sc.at("p"), "p");
  GridDomain g = grid_from_json(sc);
  const SolveResult sol = dirichlet_solve(g, p);
  const PrincipleCheck maxc = max_principle_check(g, sol.values);
  const PrincipleCheck minc = min_principle_check(g, sol.values);

  std::vector<std::string> header;
  for (int a = 0; a < g.dim(); ++a) header.push_back("x" + std::to_string(a));
  header.push_back("value");
  std::string csv = csv_row(header);
  std::vector<double> x(g.dim());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!g.valued(i)) continue;
    g.coords(i, x);
    std::vector<std::string> row;
    for (double xi : x) row.push_back(csv_num(xi));
    row.push_back(csv_num(sol.values[i]));
    csv += csv_row(row);
  }
  ScenarioResult res;
  res.verdict = {{"energy", sol.energy},
                 {"iterations", sol.iterations},
                 {"max_principle", maxc.pass},
                 {"min_principle", minc.pass},
                 {"within_pinned_hull", sol.within_pinned_hull}};
  if (sc.value("spot_check", false)) {
    const QuasiminCheck qc = quasimin_spot_check(g, sol.values, p);
    res.verdict["quasimin_spot_check"] = qc.pass;
  }
  res.csv = std::move(csv);
  return res;
}

ScenarioResult run_experiment(const json& sc, const std::string&) {
  const double p = parse_real(sc.at("p"), "p");
  ExperimentSpec spec;
  spec.dim = sc.value("dim", 2);
  spec.lo = sc.at("lo").get<std::vector<double>>();
  spec.hi = sc.at("hi").get<std::vector<double>>();
  spec.omega = sdf_from_json(sc.at("omega"));
  spec.weight = weight_nd_from_json(sc.value("weight", json()));
  spec.boundary = boundary_from_json(sc.value("boundary", json()));
  if (sc.contains("e_points")) {
    spec.e_points = sc["e_points"].get<std::vector<std::vector<double>>>();
  }
  if (sc.contains("e_region")) spec.e_region = sdf_from_json(sc["e_region"]);
  if (sc.contains("pin_value")) {
    spec.has_pin_value = true;
    spec.pin_value = sc["pin_value"].get<double>();
  }
  for (const auto& hj : sc.at("hs")) spec.hs.push_back(parse_real(hj, "hs"));
  const ExperimentReport report = removability_experiment(spec, p);

  std::string csv = csv_row({"h", "diff_removed", "diff_pinned"});
  for (const auto& lvl : report.levels) {
    csv += csv_row({csv_num(lvl.h), csv_num(lvl.diff_removed), csv_num(lvl.diff_pinned)});
  }
  const char* verdict =
      report.verdict == ExperimentVerdict::RemovableConsistent ? "removable-consistent"
      : report.verdict == ExperimentVerdict::Obstructed        ? "obstructed"
                                                                : "inconclusive";
  ScenarioResult res;
  res.verdict = {{"verdict", verdict}, {"quantity", report.quantity}};
  res.csv = std::move(csv);
  return res;
}

json one_verdict(const json& c) {
  const std::string mode = c.value("mode", std::string("unweighted"));
  FactSheet facts;
  facts.cap_e = fact_from_json(c, "cap_e");
  facts.cap_e_minus_x0 = fact_from_json(c, "cap_e_minus_x0");
  facts.cap_complement = fact_from_json(c, "cap_complement");

  CaseVerdict v;
  if (mode == "superharmonic") {
    v = classify_superharmonic(facts);
  } else {
    const int n = c.at("n").get<int>();
    const double p = parse_real(c.at("p"), "p");
    const SetDesc omega = setdesc_from_json(c.at("omega_set"));
    const SetDesc e = setdesc_from_json(c.at("e_set"));
    if (mode == "weighted") {
      const json& gj = c.at("growth");
      const BallGrowth growth =
          BallGrowth::power_law(gj.value("c", 1.0), gj.at("d").get<double>());
      v = classify_weighted(n, p, growth, omega, e, facts);
    } else if (mode == "unweighted") {
      v = classify_unweighted(n, p, omega, e, facts);
    } else {
      throw InputError("verdict: unknown mode '" + mode + "'");
    }
  }
  return {{"removable", to_string(v.removable)},
          {"clause", v.clause},
          {"facts_used", v.facts_used}};
}

ScenarioResult run_verdict(const json& sc, const std::string&) {
  json cases = sc.contains("cases") ? sc["cases"] : json::array({sc});
  std::string csv = csv_row({"case", "removable", "clause"});
  json rows = json::array();
  int idx = 0;
  for (const auto& c : cases) {
    json v = one_verdict(c);
    csv += csv_row({std::to_string(idx), v["removable"].get<std::string>(),
                    v["clause"].get<std::string>()});
    rows.push_back(std::move(v));
    ++idx;
  }
  ScenarioResult res;
  res.verdict = rows.size() == 1 && !sc.contains("cases") ? rows[0]
                                                          : json{{"results", rows}};
  res.csv = std::move(csv);
  return res;
}

using Runner = ScenarioResult (*)(const json&, const std::string&);

struct KindEntry {
  const char* kind;
  Runner runner;
  std::vector<std::string> required;
  std::vector<std::string> operations;
};

const std::vector<KindEntry>& kind_table() {
  static const std::vector<KindEntry> table = {
      {"decide1d", run_decide1d, {"p", "omega"},
       {"decide_removable_1d", "lebesgue_ratio", "nu_ratio", "nu_measure",
        "disconnection_witness"}},
      {"extend1d", run_extend1d, {"p", "omega"},
       {"weak_extend", "fit_two_points", "bounded_extension_bound"}},
      {"quasi1d", run_quasi1d, {"p", "omega"},
       {"extend_quasi_1d", "decide_removable_quasi_1d", "reflect", "q_update"}},
      {"fq", run_fq, {"p", "xs"}, {"f_q_bound"}},
      {"capacity", run_capacity, {"p", "lo", "hi", "omega", "hs"},
       {"variational_capacity", "minimize_energy", "p_energy",
        "null_capacity_trend"}},
      {"parabolic", run_parabolic, {}, {"parabolicity"}},
      {"solve", run_solve, {"p", "lo", "hi", "h", "omega"},
       {"dirichlet_solve", "max_principle_check", "min_principle_check",
        "quasimin_spot_check", "harnack_ratio"}},
      {"experiment", run_experiment, {"p", "lo", "hi", "omega", "hs"},
       {"removability_experiment", "annulus_oscillation"}},
      {"verdict", run_verdict, {},
       {"classify_unweighted", "classify_weighted", "classify_superharmonic",
        "structural_capacity", "ap_constant"}},
  };
  return table;
}

const KindEntry* find_kind(const std::string& kind) {
  for (const auto& e : kind_table()) {
    if (kind == e.kind) return &e;
  }
  return nullptr;
}

}  // namespace

json load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file: " + path);
  json sc;
  try {
    in >> sc;
  } catch (const json::exception& ex) {
    throw InputError("malformed JSON in " + path + ": " + ex.what());
  }
  return sc;
}

std::vector<std::string> validate_scenario(const json& sc,
                                           const std::string& base_dir) {
  std::vector<std::string> diags;
  if (!sc.is_object()) {
    diags.push_back("scenario must be a JSON object");
    return diags;
  }
  if (!sc.contains("version")) {
    diags.push_back("missing field: version");
  } else if (sc["version"] != 1) {
    diags.push_back("unsupported version (expected 1)");
  }
  if (!sc.contains("kind") || !sc["kind"].is_string()) {
    diags.push_back("missing field: kind");
    return diags;
  }
  const KindEntry* entry = find_kind(sc["kind"].get<std::string>());
  if (!entry) {
    diags.push_back("unknown kind: " + sc["kind"].get<std::string>());
    return diags;
  }
  bool have_cases = sc.contains("cases") && sc["cases"].is_array();
  for (const auto& field : entry->required) {
    if (have_cases) break;  // per-case fields checked at run time
    if (!sc.contains(field)) diags.push_back("missing field: " + field);
  }
  if (!diags.empty()) return diags;

  // Structural checks that do not require solving anything.
  const std::string kind = sc["kind"];
  try {
    if (kind == "decide1d" || kind == "extend1d" || kind == "quasi1d") {
      const OpenSet1D omega = parse_omega_1d(sc);
      parse_e_1d(omega, sc);
      const double p = parse_real(sc.at("p"), "p");
      parse_weight_1d(sc, p, base_dir);
    } else if (kind == "capacity" || kind == "solve" || kind == "experiment") {
      sdf_from_json(sc.at("omega"));
      weight_nd_from_json(sc.value("weight", json()));
    }
  } catch (const std::exception& ex) {
    diags.push_back(ex.what());
  }
  return diags;
}

ScenarioResult run_scenario(const json& sc, const std::string& base_dir) {
  ScenarioResult res;
  const auto diags = validate_scenario(sc, base_dir);
  if (!diags.empty()) {
    res.exit_code = 1;
    res.verdict = {{"error", "invalid scenario"}, {"diagnostics", diags}};
    return res;
  }
  const KindEntry* entry = find_kind(sc["kind"].get<std::string>());
  try {
    res = entry->runner(sc, base_dir);
  } catch (const InputError& ex) {
    res.exit_code = 1;
    res.verdict = {{"error", ex.what()}};
  } catch (const DomainError& ex) {
    res.exit_code = 2;
    res.verdict = {{"error", ex.what()}};
  }
  return res;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>&
scenario_dispatch() {
  static const auto dispatch = [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> d;
    for (const auto& e : kind_table()) d.emplace_back(e.kind, e.operations);
    return d;
  }();
  return dispatch;
}

std::vector<std::string> demo_names() {
  return {"odd-reflection", "half-line-removable", "disc-capacity",
          "parabolicity-table", "unweighted-dichotomy"};
}

json demo_scenario(const std::string& name) {
  if (name == "odd-reflection") {
    return json{{"version", 1},
                {"kind", "quasi1d"},
                {"p", 2.0},
                {"Q", 1.0},
                {"omega", json::array({{{"lo", "-1"}, {"hi", "1"}}})},
                {"e", json::array({{{"lo", "-1"}, {"hi", "0"}}})},
                {"u", {{"slope", 1.0}, {"intercept", 0.0}}}};
  }
  if (name == "half-line-removable") {
    return json{{"version", 1},
                {"kind", "decide1d"},
                {"p", 2.0},
                {"weight", "const 1"},
                {"omega", json::array({{{"lo", "-inf"}, {"hi", "inf"}}})},
                {"e", json::array({{{"lo", "0"}, {"hi", "inf"}}})}};
  }
  if (name == "disc-capacity") {
    return json{{"version", 1},
                {"kind", "capacity"},
                {"p", 2.0},
                {"dim", 2},
                {"lo", {-1.25, -1.25}},
                {"hi", {1.25, 1.25}},
                {"omega", {{"kind", "disc"}, {"center", {0.0, 0.0}}, {"radius", 1.0}}},
                {"plate", {{"kind", "disc"}, {"center", {0.0, 0.0}}, {"radius", 0.25}}},
                {"hs", {0.0625, 0.03125, 0.015625}}};
  }
  if (name == "parabolicity-table") {
    json cases = json::array();
    for (int n : {2, 3, 4}) {
      for (double p : {1.5, 2.0, 3.0, 4.5}) {
        cases.push_back({{"d", n}, {"p", p}});
      }
    }
    return json{{"version", 1}, {"kind", "parabolic"}, {"cases", cases}};
  }
  if (name == "unweighted-dichotomy") {
    json origin = {{"kind", "point"}, {"x", {0.0, 0.0}}};
    json whole = {{"kind", "whole-space"}};
    json disc = {{"kind", "ball"}, {"center", {0.0, 0.0}}, {"radius", 1.0}};
    json cases = json::array();
    cases.push_back({{"mode", "unweighted"}, {"n", 2}, {"p", 2.0},
                     {"omega_set", whole}, {"e_set", origin}});
    cases.push_back({{"mode", "unweighted"}, {"n", 2}, {"p", 3.0},
                     {"omega_set", whole}, {"e_set", origin}});
    cases.push_back({{"mode", "unweighted"}, {"n", 2}, {"p", 3.0},
                     {"omega_set", disc}, {"e_set", origin}});
    cases.push_back({{"mode", "unweighted"}, {"n", 3}, {"p", 2.0},
                     {"omega_set", whole}, {"e_set", disc}});
    return json{{"version", 1}, {"kind", "verdict"}, {"cases", cases}};
  }
  throw InputError("unknown demo '" + name + "'");
}

}  // namespace potlab
