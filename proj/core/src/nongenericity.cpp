#include "ivhs/nongenericity.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ivhs/error.hpp"

namespace ivhs {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) { return v == Verdict::NonGeneric ? "NonGeneric" : "Inconclusive"; }
std::string to_string(P0Method m) { return m == P0Method::Rank ? "rank" : "weighted-macaulay"; }

bool same_fields(const Certificate& a, const Certificate& b) {
  Certificate x = a, y = b;
  x.instance.clear();
  y.instance.clear();
  return x == y;
}

// ---- evaluation -----------------------------------------------------------------------

RingOutcome evaluate_rings(const Grading& g, std::vector<RingInstance> instances, const CriterionDegrees& degrees,
                           bool need_p0) {
  if (instances.empty()) fail_internal("NoSamples", "no ring instances to evaluate");
  RingOutcome out;
  out.mu = UINT64_MAX;
  const DegreeKey p1_target = g.add(degrees.mu, degrees.p1_factor);
  for (auto& inst : instances) {
    QuotientSample ring(g, inst.generators, inst.arithmetic, inst.record.characteristic);
    inst.record.mu = ring.quotient_dim(degrees.mu);
    out.mu = std::min(out.mu, inst.record.mu);
    if (degrees.h_top) {
      const std::uint64_t v = ring.quotient_dim(*degrees.h_top);
      out.h_top = out.h_top ? std::min(*out.h_top, v) : v;
    }
    if (degrees.h_next) {
      const std::uint64_t v = ring.quotient_dim(*degrees.h_next);
      out.h_next = out.h_next ? std::min(*out.h_next, v) : v;
    }
    if (need_p0 && !out.p0_injective) {
      const std::size_t source = ring.quotient_dim(degrees.p0_source);
      out.p0_injective = ring.injectivity_rank(degrees.p0_source, degrees.p0_factor) == source;
    }
    if (!(out.p1_nonzero && out.p1_surjective)) {
      const std::size_t rank = ring.pairing_rank(degrees.mu, degrees.p1_factor);
      out.p1_nonzero = out.p1_nonzero || rank > 0;
      out.p1_surjective = out.p1_surjective || rank == ring.quotient_dim(p1_target);
    }
    out.samples.push_back(inst.record);
  }
  const bool agree = std::all_of(out.samples.begin(), out.samples.end(),
                                 [&](const SampleRecord& r) { return r.mu == out.samples.front().mu; });
  if (!agree) out.warnings.push_back("samples disagree on dim E; the minimum is reported");
  return out;
}

void finalize(Certificate& c) {
  if (c.h_top == 0) {
    c.rhs.reset();
    c.inequality_holds = false;
    c.warnings.push_back("criterion inapplicable: h_top = 0");
  } else {
    c.rhs = inequality_rhs(c.h_top, c.h_next);
    c.inequality_holds = c.mu >= *c.rhs;
  }
  c.verdict = c.inequality_holds && c.p0_injective && c.p1_nonzero ? Verdict::NonGeneric : Verdict::Inconclusive;
  const bool expected = c.inequality_holds && c.p0_injective && c.p1_nonzero;
  if ((c.verdict == Verdict::NonGeneric) != expected) fail_internal("VerdictMismatch", "verdict equation violated");
}

// ---- toric / WPS ----------------------------------------------------------------------------

namespace {

std::string join(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Certificate certify(const Fan& fan, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy,
                    bool p0_symbolic, std::vector<std::pair<std::string, std::string>> instance) {
  if (fan.dimension() < 4) fail_hypothesis("DimensionTooSmall", "the criterion needs n >= 4");
  require_ample_cartier(fan, d, t);
  const ToricGrading g(fan);
  const DegreeClass tb = divisor_class(g, d) * t;
  const DegreeClass b0 = beta0(g);
  const HodgeNumbers h = hypersurface_hodge(fan, d, t);

  std::vector<RingInstance> instances;
  for (auto& s : sample_sections(g, tb.key(), policy))
    instances.push_back({{s.seed, s.characteristic, 0}, s.arithmetic, jacobian_generators(g, s.section)});

  CriterionDegrees degrees;
  degrees.mu = tb.key();
  degrees.p0_source = tb.key();
  degrees.p0_factor = (tb - b0).key();
  degrees.p1_factor = (tb * 2 - b0).key();
  degrees.h_top = (tb - b0).key();
  degrees.h_next = (tb * 2 - b0).key();
  RingOutcome r = evaluate_rings(g, std::move(instances), degrees, !p0_symbolic);

  Certificate c;
  c.instance = std::move(instance);
  c.h_top = h.h_top;
  c.h_next = h.h_next;
  c.mu = r.mu;
  c.p0_injective = p0_symbolic ? true : r.p0_injective;
  c.p0_method = p0_symbolic ? P0Method::WeightedMacaulay : P0Method::Rank;
  c.p1_nonzero = r.p1_nonzero;
  c.p1_surjective = r.p1_surjective;
  c.section_source = to_string(policy.source);
  c.arithmetic = to_string(policy.resolved_arithmetic());
  c.seed = policy.seed;
  c.samples = std::move(r.samples);
  c.warnings = std::move(r.warnings);
  if (r.h_top && *r.h_top != h.h_top)
    c.warnings.push_back("h_top from lattice counts differs from dim R_{t beta - beta0} = " + std::to_string(*r.h_top));
  if (r.h_next && *r.h_next != h.h_next)
    c.warnings.push_back("h_next from lattice counts differs from dim R_{2t beta - beta0} = " +
                         std::to_string(*r.h_next));
  finalize(c);
  return c;
}

}  // namespace

bool weighted_macaulay_condition(const WeightSystem& w, std::int64_t d, std::int64_t c, std::int64_t e) {
  const auto n = static_cast<std::int64_t>(w.dimension());
  const std::int64_t m = w.m(), s = w.s();
  if (c % m != 0) return false;
  const std::int64_t rho = (n + 1) * d - 2 * s;
  return rho - (c + e) > -s + m * n;
}

Certificate check_toric(const Fan& fan, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy) {
  return certify(fan, d, t, policy, false,
                 {{"kind", "toric"}, {"fan", fan.name()}, {"divisor", join(d.coefficients)}, {"t", std::to_string(t)}});
}

Certificate check_wps(const WeightSystem& w, std::int64_t d, const GenericityPolicy& policy, P0Choice p0) {
  if (w.dimension() < 4) fail_hypothesis("DimensionTooSmall", "the criterion needs n >= 4");
  if (w.s() % w.m() != 0) fail_hypothesis("WeightHypothesis", "m = lcm(q_1..q_n) must divide s");
  if (d <= 0) fail_hypothesis("NotAmple", "degree must be positive");
  if (d % w.m() != 0) fail_hypothesis("NotCartier", "m = " + std::to_string(w.m()) + " does not divide d");
  const bool macaulay = weighted_macaulay_condition(w, d, d - w.s(), d);
  if (p0 == P0Choice::WeightedMacaulay && !macaulay)
    fail_hypothesis("MacaulayConditionFails", "weighted Macaulay condition does not hold for e = d, c = d - s");
  const bool symbolic = p0 == P0Choice::WeightedMacaulay || (p0 == P0Choice::Auto && macaulay);
  TorusDivisor div{IntVector(w.dimension() + 1, 0)};
  div.coefficients[0] = d;
  return certify(wps_fan(w), div, 1, policy, symbolic,
                 {{"kind", "wps"}, {"weights", w.to_string()}, {"d", std::to_string(d)}});
}

ScanResult scan(const Fan& fan, const TorusDivisor& d, std::int64_t t_min, std::int64_t t_max,
                const GenericityPolicy& policy) {
  if (t_min < 1 || t_max < t_min) fail_input("BadRange", "need 1 <= t_min <= t_max");
  ScanResult out;
  for (std::int64_t t = t_min; t <= t_max; ++t) {
    Certificate c = check_toric(fan, d, t, policy);
    if (!out.first_nongeneric && c.verdict == Verdict::NonGeneric) out.first_nongeneric = t;
    out.certificates.emplace_back(t, std::move(c));
  }
  return out;
}

// ---- serialization --------------------------------------------------------------------------

namespace {

std::uint64_t parse_u64(const json& j, const char* field) {
  if (!j.is_string()) fail_input("BadCertificate", std::string(field) + " must be a decimal string");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail_input("BadCertificate", std::string(field) + " is not a nonnegative integer");
  return std::stoull(s);
}

}  // namespace

std::string to_json(const Certificate& c, int indent) {
  json j;
  json inst = json::object();
  for (const auto& [k, v] : c.instance) inst[k] = v;
  j["instance"] = inst;
  j["h_top"] = std::to_string(c.h_top);
  j["h_next"] = std::to_string(c.h_next);
  j["mu"] = std::to_string(c.mu);
  j["rhs"] = c.rhs ? json(std::to_string(*c.rhs)) : json(nullptr);
  j["inequality_holds"] = c.inequality_holds;
  j["p0_injective"] = c.p0_injective;
  j["p0_method"] = to_string(c.p0_method);
  j["p1_nonzero"] = c.p1_nonzero;
  j["p1_method"] = c.p1_method;
  j["p1_surjective"] = c.p1_surjective;
  j["verdict"] = to_string(c.verdict);
  j["section_source"] = c.section_source;
  j["arithmetic"] = c.arithmetic;
  json seeds;
  seeds["seed"] = std::to_string(c.seed);
  json samples = json::array();
  for (const auto& s : c.samples)
    samples.push_back({{"seed", std::to_string(s.seed)},
                       {"characteristic", std::to_string(s.characteristic)},
                       {"mu", std::to_string(s.mu)}});
  seeds["samples"] = samples;
  j["seeds"] = seeds;
  j["warnings"] = c.warnings;
  return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_input("BadCertificate", e.what());
  }
  try {
    Certificate c;
    for (const auto& [k, v] : j.at("instance").items()) c.instance.emplace_back(k, v.get<std::string>());
    c.h_top = parse_u64(j.at("h_top"), "h_top");
    c.h_next = parse_u64(j.at("h_next"), "h_next");
    c.mu = parse_u64(j.at("mu"), "mu");
    if (!j.at("rhs").is_null()) c.rhs = parse_u64(j.at("rhs"), "rhs");
    c.inequality_holds = j.at("inequality_holds").get<bool>();
    c.p0_injective = j.at("p0_injective").get<bool>();
    const auto method = j.at("p0_method").get<std::string>();
    if (method == "rank") c.p0_method = P0Method::Rank;
    else if (method == "weighted-macaulay") c.p0_method = P0Method::WeightedMacaulay;
    else fail_input("BadCertificate", "unknown p0_method " + method);
    c.p1_nonzero = j.at("p1_nonzero").get<bool>();
    c.p1_method = j.at("p1_method").get<std::string>();
    c.p1_surjective = j.at("p1_surjective").get<bool>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "NonGeneric") c.verdict = Verdict::NonGeneric;
    else if (verdict == "Inconclusive") c.verdict = Verdict::Inconclusive;
    else fail_input("BadCertificate", "unknown verdict " + verdict);
    c.section_source = j.at("section_source").get<std::string>();
    c.arithmetic = j.at("arithmetic").get<std::string>();
    const auto& seeds = j.at("seeds");
    c.seed = parse_u64(seeds.at("seed"), "seed");
    for (const auto& s : seeds.at("samples"))
      c.samples.push_back({parse_u64(s.at("seed"), "seed"),
                           static_cast<std::uint32_t>(parse_u64(s.at("characteristic"), "characteristic")),
                           parse_u64(s.at("mu"), "mu")});
    c.warnings = j.at("warnings").get<std::vector<std::string>>();
    return c;
  } catch (const json::exception& e) {
    fail_input("BadCertificate", e.what());
  }
}

std::string to_text(const Certificate& c) {
  std::ostringstream os;
  for (const auto& [k, v] : c.instance) os << k << ": " << v << "\n";
  os << "h_top            " << c.h_top << "\n";
  os << "h_next           " << c.h_next << "\n";
  os << "mu               " << c.mu << "\n";
  os << "rhs              " << (c.rhs ? std::to_string(*c.rhs) : "undefined") << "\n";
  os << "inequality_holds " << (c.inequality_holds ? "yes" : "no") << "\n";
  os << "p0_injective     " << (c.p0_injective ? "yes" : "no") << " (" << to_string(c.p0_method) << ")\n";
  os << "p1_nonzero       " << (c.p1_nonzero ? "yes" : "no") << " (" << c.p1_method << ")\n";
  os << "p1_surjective    " << (c.p1_surjective ? "yes" : "no") << "\n";
  os << "verdict          " << to_string(c.verdict) << "\n";
  os << "sections         " << c.section_source << ", " << c.arithmetic << " arithmetic, seed " << c.seed << "\n";
  for (const auto& w : c.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace ivhs
