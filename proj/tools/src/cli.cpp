#include "ivhs_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ivhs/complete_intersection.hpp"
#include "ivhs/error.hpp"
#include "ivhs/hodge.hpp"
#include "ivhs/nongenericity.hpp"
#include "ivhs/symmetrizer.hpp"

namespace ivhs::cli {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("FileNotFound", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail_input("BadDocument", e.what());
  }
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    if (j.is_string()) {
      try {
        std::size_t used = 0;
        const std::string s = j.get<std::string>();
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
      } catch (const std::exception&) {
      }
    }
    fail_input("BadDocument", where + ": expected an integer");
  }
  return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail_input("BadDocument", where + ": missing field \"" + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) fail_input("BadDocument", where + "." + key + ": expected an array");
  return a;
}

std::vector<std::int64_t> int_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail_input("BadDocument", where + ": expected an array of integers");
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(std::int64_t x) { return std::to_string(x); }

std::string rational_string(const Rational& q) { return q.get_str(); }

GenericityPolicy make_policy(std::uint64_t seed, int samples, std::int64_t coeff_bound, const std::string& sections,
                             const std::string& arithmetic) {
  GenericityPolicy p;
  p.seed = seed;
  p.samples = samples;
  p.coeff_bound = coeff_bound;
  if (samples < 1) fail_input("BadOption", "--samples must be at least 1");
  if (coeff_bound < 1) fail_input("BadOption", "--coeff-bound must be at least 1");
  if (sections == "random") {
    p.source = SectionSource::Random;
  } else if (sections == "fermat") {
    p.source = SectionSource::Fermat;
  } else {
    fail_input("BadOption", "--sections must be random or fermat");
  }
  if (arithmetic == "rational") {
    p.arithmetic = Arithmetic::Rational;
  } else if (arithmetic == "modular") {
    p.arithmetic = Arithmetic::Modular;
  } else if (arithmetic != "auto") {
    fail_input("BadOption", "--arithmetic must be auto, rational or modular");
  }
  return p;
}

/// A hypersurface degree either on a fan (divisor, t) or on a weighted
/// projective space (weights, d), the latter read as t = 1 and D = d D_0.
struct Target {
  std::optional<Fan> fan;
  TorusDivisor divisor;
  std::int64_t t = 1;
};

struct TargetOptions {
  std::string fan_path, weights, divisor;
  std::int64_t t = 0, d = 0;

  void add_to(CLI::App* app, bool need_t) {
    auto* fan = app->add_option("--fan", fan_path, "fan document (JSON)");
    auto* w = app->add_option("--weights", weights, "weights q_0,...,q_n of a weighted projective space");
    app->add_option("--divisor", divisor, "torus-invariant divisor coefficients, one per ray")->needs(fan);
    if (need_t) app->add_option("--t", t, "dilation t >= 1")->needs(fan);
    app->add_option("--d", d, "degree on the weighted projective space")->needs(w);
    fan->excludes(w);
  }

  Target resolve() const {
    Target out;
    if (!fan_path.empty()) {
      out.fan = parse_fan_document(read_file(fan_path));
      if (divisor.empty()) fail_input("BadOption", "--divisor is required with --fan");
      out.divisor.coefficients = parse_int_list(divisor);
      if (out.divisor.coefficients.size() != out.fan->ray_count())
        fail_input("BadOption", "--divisor needs one coefficient per ray");
      out.t = t;
    } else if (!weights.empty()) {
      const WeightSystem w(parse_int_list(weights));
      out.fan = wps_fan(w);
      out.divisor.coefficients.assign(w.dimension() + 1, 0);
      out.divisor.coefficients[0] = d;
      out.t = 1;
    } else {
      fail_input("BadOption", "give either --fan or --weights");
    }
    return out;
  }
};

struct PolicyOptions {
  std::uint64_t seed = 1;
  int samples = 3;
  std::int64_t coeff_bound = 10;
  std::string sections = "random";
  std::string arithmetic = "auto";

  void add_to(CLI::App* app, const std::string& default_sections) {
    sections = default_sections;
    app->add_option("--seed", seed, "seed for every random choice")->capture_default_str();
    app->add_option("--samples", samples, "random sections per instance")->capture_default_str();
    app->add_option("--coeff-bound", coeff_bound, "coefficients are drawn from [-k, k] \\ {0}")->capture_default_str();
    app->add_option("--sections", sections, "random | fermat")->capture_default_str();
    app->add_option("--arithmetic", arithmetic, "auto | rational | modular")->capture_default_str();
  }

  GenericityPolicy policy() const { return make_policy(seed, samples, coeff_bound, sections, arithmetic); }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- subcommand bodies -------------------------------------------------------------

void do_ehrhart(const std::string& path, bool as_json, std::ostream& out) {
  const LatticePolytope p = parse_polytope_document(read_file(path));
  const RationalPolynomial e = ehrhart_polynomial(p);
  if (as_json) {
    json j;
    j["ambient_dim"] = str(static_cast<std::uint64_t>(p.ambient_dimension()));
    j["dimension"] = std::to_string(p.dimension());
    json coeffs = json::array();
    for (const auto& c : e.coefficients()) coeffs.push_back(rational_string(c));
    j["coefficients"] = coeffs;
    j["lattice_points"] = str(count_lattice_points(p, false));
    j["interior_points"] = str(count_lattice_points(p, true));
    j["normalized_volume"] = rational_string(normalized_volume(p));
    emit(out, j);
    return;
  }
  out << "dimension        " << p.dimension() << " (ambient " << p.ambient_dimension() << ")\n";
  out << "E(t)             " << e.to_string() << "\n";
  out << "coefficients     ";
  for (std::size_t k = 0; k < e.coefficients().size(); ++k) out << (k ? " " : "") << e.coefficients()[k].get_str();
  out << "\n";
  out << "lattice points   " << count_lattice_points(p, false) << "\n";
  out << "interior points  " << count_lattice_points(p, true) << "\n";
}

void do_hodge(const Target& tg, bool as_json, std::ostream& out) {
  require_ample_cartier(*tg.fan, tg.divisor, tg.t);
  const HodgeNumbers h = hypersurface_hodge(*tg.fan, tg.divisor, tg.t);
  std::optional<std::uint64_t> rhs;
  if (h.h_top > 0) rhs = inequality_rhs(h.h_top, h.h_next);
  if (as_json) {
    json j;
    j["fan"] = tg.fan->name();
    j["t"] = str(tg.t);
    j["h_top"] = str(h.h_top);
    j["h_next"] = str(h.h_next);
    j["rhs"] = rhs ? json(str(*rhs)) : json(nullptr);
    emit(out, j);
    return;
  }
  out << "h^{n-1,0}        " << h.h_top << "\n";
  out << "h^{n-2,1}        " << h.h_next << "\n";
  out << "rhs              " << (rhs ? std::to_string(*rhs) : "undefined") << "\n";
}

void do_moduli(const Target& tg, const GenericityPolicy& policy, bool as_json, std::ostream& out) {
  const ToricGrading g(*tg.fan);
  const std::uint64_t mu = moduli_dim(g, tg.divisor, tg.t, policy);
  if (as_json) {
    json j;
    j["fan"] = tg.fan->name();
    j["t"] = str(tg.t);
    j["mu"] = str(mu);
    j["section_source"] = to_string(policy.source);
    j["arithmetic"] = to_string(policy.resolved_arithmetic());
    j["seed"] = str(policy.seed);
    emit(out, j);
    return;
  }
  out << "mu               " << mu << "\n";
}

void print_certificate(const Certificate& c, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(c) << "\n";
  } else {
    out << to_text(c);
  }
}

void do_scan(const Target& tg, std::int64_t t_min, std::int64_t t_max, const GenericityPolicy& policy, bool as_json,
             std::ostream& out) {
  const ScanResult r = scan(*tg.fan, tg.divisor, t_min, t_max, policy);
  if (as_json) {
    json j;
    json rows = json::array();
    for (const auto& [t, c] : r.certificates) {
      json row;
      row["t"] = str(t);
      row["certificate"] = json::parse(to_json(c));
      rows.push_back(row);
    }
    j["certificates"] = rows;
    j["first_nongeneric"] = r.first_nongeneric ? json(str(*r.first_nongeneric)) : json(nullptr);
    emit(out, j);
    return;
  }
  out << "   t    h_top   h_next       mu      rhs  p0  p1  verdict\n";
  for (const auto& [t, c] : r.certificates) {
    char line[160];
    std::snprintf(line, sizeof line, "%4lld %8llu %8llu %8llu %8s  %-3s %-3s %s\n", static_cast<long long>(t),
                  static_cast<unsigned long long>(c.h_top), static_cast<unsigned long long>(c.h_next),
                  static_cast<unsigned long long>(c.mu), c.rhs ? std::to_string(*c.rhs).c_str() : "-",
                  c.p0_injective ? "yes" : "no", c.p1_nonzero ? "yes" : "no", to_string(c.verdict).c_str());
    out << line;
  }
  out << "first NonGeneric t: " << (r.first_nongeneric ? std::to_string(*r.first_nongeneric) : "none") << "\n";
}

CompositionProblem parse_problem_document(const std::string& text) {
  const json j = parse_json(text);
  CompositionProblem p;
  p.g0 = static_cast<std::size_t>(as_int(field(j, "g0", "problem"), "problem.g0"));
  p.g1 = static_cast<std::size_t>(as_int(field(j, "g1", "problem"), "problem.g1"));
  p.g2 = static_cast<std::size_t>(as_int(field(j, "g2", "problem"), "problem.g2"));
  const json& basis = array_field(j, "e0_basis", "problem");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::string where = "problem.e0_basis[" + std::to_string(k) + "]";
    if (!basis[k].is_array() || basis[k].size() != p.g1) fail_input("BadDocument", where + ": expected g1 rows");
    RationalMatrix a(p.g1, p.g0);
    for (std::size_t r = 0; r < p.g1; ++r) {
      const auto row = int_array(basis[k][r], where + "[" + std::to_string(r) + "]");
      if (row.size() != p.g0) fail_input("BadDocument", where + ": rows need g0 entries");
      for (std::size_t c = 0; c < p.g0; ++c) a(r, c) = static_cast<long>(row[c]);
    }
    p.e0_basis.push_back(std::move(a));
  }
  return p;
}

void do_symm_problem(const std::string& path, bool as_json, std::ostream& out) {
  const CompositionProblem p = parse_problem_document(read_file(path));
  const SymmetrizerSpace s = symmetrizer_space(p);
  const std::uint64_t threshold = generic_threshold(p.g0, p.g1);
  if (as_json) {
    json j;
    j["unknowns"] = str(static_cast<std::uint64_t>(p.unknowns()));
    j["dim"] = str(static_cast<std::uint64_t>(s.dim));
    j["threshold"] = str(threshold);
    emit(out, j);
    return;
  }
  out << "unknowns         " << p.unknowns() << "\n";
  out << "dim Symm         " << s.dim << "\n";
  out << "threshold        " << threshold << " (d = " << p.d() << ")\n";
}

void do_symm_random(std::size_t g0, std::size_t g1, std::size_t g2, std::size_t d, std::size_t trials,
                    std::uint64_t seed, bool as_json, std::ostream& out) {
  const TrivialityReport r = randomized_triviality_report(g0, g1, g2, d, trials, seed);
  const std::uint64_t threshold = generic_threshold(g0, g1);
  if (as_json) {
    json j;
    j["threshold"] = str(threshold);
    j["trials"] = str(static_cast<std::uint64_t>(r.trials));
    j["failures"] = str(static_cast<std::uint64_t>(r.failures));
    json seeds = json::array();
    for (auto s : r.failing_seeds) seeds.push_back(str(s));
    j["failing_seeds"] = seeds;
    j["below_threshold"] = r.below_threshold;
    emit(out, j);
    return;
  }
  out << "threshold        " << threshold << "\n";
  out << "trials           " << r.trials << "\n";
  out << "failures         " << r.failures << "\n";
  for (auto s : r.failing_seeds) out << "failing seed     " << s << "\n";
  if (r.below_threshold) out << "note: d is below the threshold; failures are expected\n";
}

void do_ci(const CIProblem& prob, const GenericityPolicy& policy, bool as_json, std::ostream& out) {
  const std::int64_t dx = prob.d_X();
  const auto top = static_cast<std::int64_t>(prob.n - prob.c());
  std::vector<std::uint64_t> hodge;
  if (dx >= 0)
    for (std::int64_t p = 0; p <= top; ++p) hodge.push_back(ci_hodge(prob, p, policy));
  std::optional<std::uint64_t> mu;
  if (dx >= 0) mu = ci_moduli(prob, policy);
  const Integer bound = effective_bound(prob.n, prob.c());
  if (as_json) {
    json j;
    j["n"] = str(static_cast<std::uint64_t>(prob.n));
    json degs = json::array();
    for (auto d : prob.degrees) degs.push_back(str(d));
    j["degrees"] = degs;
    j["d_X"] = str(dx);
    json h = json::array();
    for (auto x : hodge) h.push_back(str(x));
    j["hodge"] = h;
    j["mu"] = mu ? json(str(*mu)) : json(nullptr);
    j["effective_bound"] = bound.get_str();
    emit(out, j);
    return;
  }
  out << "d(X)             " << dx << "\n";
  for (std::size_t p = 0; p < hodge.size(); ++p)
    out << "h^{" << top - static_cast<std::int64_t>(p) << "," << p << "}_prim" << std::string(p < 10 ? 6 : 5, ' ')
        << hodge[p] << "\n";
  out << "mu               " << (mu ? std::to_string(*mu) : "unavailable") << "\n";
  out << "effective bound  " << bound.get_str() << "\n";
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      fail_input("BadList", "not an integer: \"" + item + "\"");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) fail_input("BadList", "not an integer: \"" + item + "\"");
    v.push_back(x);
  }
  if (v.empty()) fail_input("BadList", "empty integer list");
  return v;
}

Fan parse_fan_document(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail_input("BadDocument", "fan: expected a JSON object");
  const json& rays = array_field(j, "rays", "fan");
  const json& cones = array_field(j, "max_cones", "fan");
  if (rays.empty()) fail_input("BadDocument", "fan.rays: no rays");
  std::vector<IntVector> r;
  for (std::size_t i = 0; i < rays.size(); ++i) r.push_back(int_array(rays[i], "fan.rays[" + std::to_string(i) + "]"));
  const std::size_t n = r[0].size();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].size() != n) fail_input("BadDocument", "fan.rays[" + std::to_string(i) + "]: wrong length");
  std::vector<std::vector<std::size_t>> c;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::string where = "fan.max_cones[" + std::to_string(k) + "]";
    std::vector<std::size_t> cone;
    for (auto x : int_array(cones[k], where)) {
      if (x < 0 || static_cast<std::size_t>(x) >= r.size()) fail_input("BadDocument", where + ": ray index out of range");
      cone.push_back(static_cast<std::size_t>(x));
    }
    c.push_back(std::move(cone));
  }
  std::string name = "fan";
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_input("BadDocument", "fan.name: expected a string");
    name = j["name"].get<std::string>();
  }
  return Fan(n, std::move(r), std::move(c), name);
}

LatticePolytope parse_polytope_document(const std::string& text) {
  const json j = parse_json(text);
  const json& ineqs = array_field(j, "inequalities", "polytope");
  if (ineqs.empty()) fail_input("BadDocument", "polytope.inequalities: empty");
  std::vector<Inequality> v;
  std::size_t n = 0;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    const std::string where = "polytope.inequalities[" + std::to_string(i) + "]";
    Inequality q;
    q.normal = int_array(field(ineqs[i], "a", where), where + ".a");
    q.constant = as_int(field(ineqs[i], "c", where), where + ".c");
    if (i == 0) n = q.normal.size();
    if (q.normal.size() != n || n == 0) fail_input("BadDocument", where + ".a: wrong length");
    v.push_back(std::move(q));
  }
  return LatticePolytope(n, std::move(v));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge numbers, moduli and IVHS non-genericity certificates", "ivhs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of a lattice polytope");
  std::string polytope_path;
  ehrhart->add_option("--polytope", polytope_path, "polytope document (JSON)")->required();
  ehrhart->add_flag("--json", as_json);

  TargetOptions hodge_target, moduli_target, toric_target, scan_target;
  PolicyOptions moduli_policy, toric_policy, wps_policy, ci_check_policy, scan_policy, ci_policy;

  auto* hodge = app.add_subcommand("hodge", "h^{n-1,0} and h^{n-2,1} from lattice counts");
  hodge_target.add_to(hodge, true);
  hodge->add_flag("--json", as_json);

  auto* moduli = app.add_subcommand("moduli", "dimension of the Jacobian ring in degree t beta");
  moduli_target.add_to(moduli, true);
  moduli_policy.add_to(moduli, "random");
  moduli->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check", "non-genericity certificate");
  check->require_subcommand(1);
  auto* toric = check->add_subcommand("toric", "hypersurface of degree t [D] in a toric variety");
  std::string fan_path, divisor;
  std::int64_t t = 0;
  toric->add_option("--fan", fan_path, "fan document (JSON)")->required();
  toric->add_option("--divisor", divisor, "divisor coefficients, one per ray")->required();
  toric->add_option("--t", t, "dilation t >= 1")->required();
  toric_policy.add_to(toric, "random");
  toric->add_flag("--json", as_json);

  auto* wps = check->add_subcommand("wps", "hypersurface of degree d in a weighted projective space");
  std::string weights, p0_method = "auto";
  std::int64_t d = 0;
  wps->add_option("--weights", weights, "q_0,...,q_n with q_0 = 1")->required();
  wps->add_option("--d", d, "degree")->required();
  wps->add_option("--p0-method", p0_method, "auto | rank | weighted-macaulay")->capture_default_str();
  wps_policy.add_to(wps, "random");
  wps->add_flag("--json", as_json);

  auto* check_ci_cmd = check->add_subcommand("ci", "complete intersection in P^n");
  std::size_t ci_n = 0;
  std::string ci_degrees;
  check_ci_cmd->add_option("--n", ci_n, "ambient P^n")->required();
  check_ci_cmd->add_option("--degrees", ci_degrees, "d_1,...,d_c")->required();
  ci_check_policy.add_to(check_ci_cmd, "fermat");
  check_ci_cmd->add_flag("--json", as_json);

  auto* scan_cmd = app.add_subcommand("scan", "certificates for a range of t");
  std::int64_t t_min = 1, t_max = 1;
  scan_cmd->add_option("--fan", scan_target.fan_path, "fan document (JSON)")->required();
  scan_cmd->add_option("--divisor", scan_target.divisor, "divisor coefficients")->required();
  scan_cmd->add_option("--t-min", t_min, "first t")->required();
  scan_cmd->add_option("--t-max", t_max, "last t")->required();
  scan_policy.add_to(scan_cmd, "fermat");
  scan_cmd->add_flag("--json", as_json);

  auto* symm = app.add_subcommand("symm", "symmetrizer spaces and the generic-triviality threshold");
  std::string problem_path;
  std::size_t g0 = 0, g1 = 0, g2 = 0, sd = 0, trials = 20;
  std::uint64_t symm_seed = 1;
  auto* prob_opt = symm->add_option("--problem", problem_path, "composition problem document (JSON)");
  auto* g0_opt = symm->add_option("--g0", g0, "dim G0");
  symm->add_option("--g1", g1, "dim G1")->needs(g0_opt);
  symm->add_option("--g2", g2, "dim G2")->needs(g0_opt);
  symm->add_option("--d", sd, "dim E0")->needs(g0_opt);
  symm->add_option("--trials", trials, "random trials")->capture_default_str();
  symm->add_option("--seed", symm_seed, "seed")->capture_default_str();
  prob_opt->excludes(g0_opt);
  symm->add_flag("--json", as_json);

  auto* ci = app.add_subcommand("ci", "Hodge numbers, moduli and effective bound of a complete intersection");
  std::size_t ci2_n = 0;
  std::string ci2_degrees;
  ci->add_option("--n", ci2_n, "ambient P^n")->required();
  ci->add_option("--degrees", ci2_degrees, "d_1,...,d_c")->required();
  ci_policy.add_to(ci, "fermat");
  ci->add_flag("--json", as_json);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*ehrhart) {
      do_ehrhart(polytope_path, as_json, out);
    } else if (*hodge) {
      do_hodge(hodge_target.resolve(), as_json, out);
    } else if (*moduli) {
      do_moduli(moduli_target.resolve(), moduli_policy.policy(), as_json, out);
    } else if (*toric) {
      const Fan fan = parse_fan_document(read_file(fan_path));
      TorusDivisor div{parse_int_list(divisor)};
      if (div.coefficients.size() != fan.ray_count()) fail_input("BadOption", "--divisor needs one coefficient per ray");
      print_certificate(check_toric(fan, div, t, toric_policy.policy()), as_json, out);
    } else if (*wps) {
      P0Choice choice = P0Choice::Auto;
      if (p0_method == "rank") {
        choice = P0Choice::Rank;
      } else if (p0_method == "weighted-macaulay") {
        choice = P0Choice::WeightedMacaulay;
      } else if (p0_method != "auto") {
        fail_input("BadOption", "--p0-method must be auto, rank or weighted-macaulay");
      }
      print_certificate(check_wps(WeightSystem(parse_int_list(weights)), d, wps_policy.policy(), choice), as_json, out);
    } else if (*check_ci_cmd) {
      print_certificate(check_ci(make_ci_problem(ci_n, parse_int_list(ci_degrees)), ci_check_policy.policy()), as_json,
                        out);
    } else if (*scan_cmd) {
      do_scan(scan_target.resolve(), t_min, t_max, scan_policy.policy(), as_json, out);
    } else if (*symm) {
      if (!problem_path.empty()) {
        do_symm_problem(problem_path, as_json, out);
      } else if (g0 > 0) {
        do_symm_random(g0, g1, g2, sd, trials, symm_seed, as_json, out);
      } else {
        fail_input("BadOption", "give --problem or --g0 --g1 --g2 --d");
      }
    } else if (*ci) {
      do_ci(make_ci_problem(ci2_n, parse_int_list(ci2_degrees)), ci_policy.policy(), as_json, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidInput:
        return kInputError;
      case ErrorKind::HypothesisViolation:
        return kHypothesis;
      case ErrorKind::Internal:
        return kInternal;
    }
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace ivhs::cli
