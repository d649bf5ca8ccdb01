#include "ivhs/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ivhs/error.hpp"
#include "ivhs/random.hpp"

namespace ivhs {

namespace {

using RationalRows = std::vector<RationalVector>;

// Inverse of a square rational matrix by Gauss-Jordan; nullopt if singular.
std::optional<RationalRows> invert(RationalRows a) {
  const std::size_t n = a.size();
  RationalRows inv(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rational determinant(RationalRows a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

RationalVector to_rational(std::span<const std::int64_t> v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

RationalRows cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  RationalRows b;
  for (auto j : cone) b.push_back(to_rational(fan.rays()[j]));
  return b;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) fail_input("Overflow", "degree data exceeds 64-bit range");
  return x.get_si();
}

std::int64_t positive_mod(const Integer& x, std::int64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

}  // namespace

// ---- Fan --------------------------------------------------------------------

Fan::Fan(std::size_t n, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones, std::string name)
    : n_(n), rays_(std::move(rays)), cones_(std::move(max_cones)), name_(std::move(name)) {
  if (n_ == 0) fail_input("BadFan", "lattice rank must be positive");
  if (rays_.size() < n_ + 1) fail_input("FanNotComplete", "a complete fan needs at least n+1 rays");
  for (std::size_t j = 0; j < rays_.size(); ++j) {
    const auto& v = rays_[j];
    if (v.size() != n_) fail_input("BadFan", "ray " + std::to_string(j) + " has wrong length");
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g != 1) fail_input("BadFan", "ray " + std::to_string(j) + " is not primitive");
    for (std::size_t k = 0; k < j; ++k)
      if (rays_[k] == v) fail_input("BadFan", "duplicate ray " + std::to_string(j));
  }
  if (cones_.empty()) fail_input("BadFan", "no maximal cones");
  for (auto& cone : cones_) {
    if (cone.size() != n_) fail_input("NotSimplicial", "every maximal cone needs exactly n rays");
    for (auto j : cone)
      if (j >= rays_.size()) fail_input("BadFan", "cone index out of range");
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) fail_input("BadFan", "repeated ray in a cone");
    if (sgn(determinant(cone_matrix(*this, cone))) == 0)
      fail_input("NotSimplicial", "cone rays are linearly dependent");
  }

  // Walls: every facet of every max cone is shared by exactly one other max
  // cone, lying on the opposite side of the wall.
  std::map<std::vector<std::size_t>, std::vector<int>> walls;
  for (const auto& cone : cones_)
    for (std::size_t drop = 0; drop < n_; ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < n_; ++i)
        if (i != drop) facet.push_back(cone[i]);
      RationalRows m;
      for (auto j : facet) m.push_back(to_rational(rays_[j]));
      m.push_back(to_rational(rays_[cone[drop]]));
      walls[facet].push_back(sgn(determinant(std::move(m))));
    }
  for (const auto& [facet, sides] : walls) {
    if (sides.size() != 2) fail_input("FanNotComplete", "a wall is not shared by exactly two maximal cones");
    if (sides[0] == sides[1]) fail_input("BadFan", "two maximal cones overlap across a wall");
  }

  // Cover screen: rays, pairwise midpoints and random directions.
  std::vector<RationalVector> probes;
  for (const auto& v : rays_) probes.push_back(to_rational(v));
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = i + 1; j < rays_.size(); ++j) {
      RationalVector mid(n_);
      for (std::size_t k = 0; k < n_; ++k) mid[k] = Rational(static_cast<long>(rays_[i][k] + rays_[j][k]), 2);
      probes.push_back(std::move(mid));
    }
  Rng rng(0x66616eULL);
  for (int t = 0; t < 32; ++t) {
    RationalVector v(n_);
    for (auto& x : v) x = static_cast<long>(rng.uniform(-1000, 1000));
    probes.push_back(std::move(v));
  }
  for (const auto& v : probes) {
    bool covered = false;
    for (std::size_t k = 0; k < cones_.size() && !covered; ++k) covered = cone_contains(k, v);
    if (!covered) fail_input("FanNotComplete", "maximal cones do not cover N_R");
  }
}

bool Fan::cone_contains(std::size_t k, std::span<const Rational> v) const {
  // v = sum lambda_i ray_i  <=>  lambda = B^{-T} v.
  const auto inv = invert(cone_matrix(*this, cones_[k]));
  if (!inv) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    Rational lambda = 0;
    for (std::size_t j = 0; j < n_; ++j) lambda += (*inv)[j][i] * v[j];
    if (sgn(lambda) < 0) return false;
  }
  return true;
}

// ---- Chow group ---------------------------------------------------------------

ChowPresentation::ChowPresentation(const Fan& fan) : r_(fan.ray_count()), n_(fan.dimension()) {
  IntegerMatrix pairing(r_, std::vector<Integer>(n_));
  for (std::size_t j = 0; j < r_; ++j)
    for (std::size_t i = 0; i < n_; ++i) pairing[j][i] = static_cast<long>(fan.rays()[j][i]);
  SmithForm snf = smith_normal_form(pairing);
  for (std::size_t i = 0; i < n_; ++i)
    if (sgn(snf.diagonal[i]) == 0) fail_input("FanNotComplete", "rays do not span N");

  IntegerMatrix free(snf.left.begin() + static_cast<std::ptrdiff_t>(n_), snf.left.end());
  HermiteForm hnf = hermite_normal_form(free);
  free_rows_ = std::move(hnf.hermite);
  free_transform_inverse_ = std::move(hnf.transform_inverse);
  for (std::size_t i = 0; i < n_; ++i)
    if (snf.diagonal[i] > 1) {
      torsion_rows_.push_back(snf.left[i]);
      torsion_orders_.push_back(to_int64(snf.diagonal[i]));
    }
  left_inverse_ = std::move(snf.left_inverse);
  for (std::size_t i = 0; i < n_; ++i)
    if (snf.diagonal[i] > 1) torsion_index_.push_back(i);
}

DegreeKey ChowPresentation::project(std::span<const std::int64_t> x) const {
  if (x.size() != r_) fail_input("BadDegree", "exponent vector length differs from ray count");
  DegreeKey key;
  auto dot = [&](const std::vector<Integer>& row) {
    Integer s = 0;
    for (std::size_t j = 0; j < r_; ++j) s += row[j] * static_cast<long>(x[j]);
    return s;
  };
  for (const auto& row : free_rows_) key.push_back(to_int64(dot(row)));
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) key.push_back(positive_mod(dot(torsion_rows_[k]), torsion_orders_[k]));
  return key;
}

IntVector ChowPresentation::lift(const DegreeKey& key) const {
  const std::size_t f = free_rank();
  if (key.size() != f + torsion_orders_.size()) fail_input("BadDegree", "degree key has wrong length");
  std::vector<Integer> y(r_, 0);
  for (std::size_t k = 0; k < torsion_index_.size(); ++k) y[torsion_index_[k]] = static_cast<long>(key[f + k]);
  for (std::size_t a = 0; a < f; ++a) {
    Integer s = 0;
    for (std::size_t b = 0; b < f; ++b) s += free_transform_inverse_[a][b] * static_cast<long>(key[b]);
    y[n_ + a] = s;
  }
  const auto x = multiply(left_inverse_, y);
  IntVector out;
  for (const auto& v : x) out.push_back(to_int64(v));
  return out;
}

DegreeKey ChowPresentation::reduce(DegreeKey key) const {
  const std::size_t f = free_rank();
  for (std::size_t k = 0; k < torsion_orders_.size(); ++k) {
    auto& v = key[f + k];
    v %= torsion_orders_[k];
    if (v < 0) v += torsion_orders_[k];
  }
  return key;
}

DegreeKey ChowPresentation::add(const DegreeKey& a, const DegreeKey& b) const {
  DegreeKey s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce(std::move(s));
}

DegreeKey ChowPresentation::negate(const DegreeKey& a) const {
  DegreeKey s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return reduce(std::move(s));
}

std::shared_ptr<const ChowPresentation> chow_presentation(const Fan& fan) {
  return std::make_shared<const ChowPresentation>(fan);
}

// ---- DegreeClass --------------------------------------------------------------

DegreeClass::DegreeClass(std::shared_ptr<const ChowPresentation> presentation, DegreeKey key)
    : pres_(std::move(presentation)), key_(pres_->reduce(std::move(key))) {}

std::span<const std::int64_t> DegreeClass::free_part() const { return {key_.data(), pres_->free_rank()}; }
std::span<const std::int64_t> DegreeClass::torsion_part() const {
  return {key_.data() + pres_->free_rank(), pres_->torsion_orders().size()};
}

DegreeClass DegreeClass::operator+(const DegreeClass& o) const {
  if (pres_ != o.pres_) fail_input("PresentationMismatch", "degree classes from different fans");
  return DegreeClass(pres_, pres_->add(key_, o.key_));
}
DegreeClass DegreeClass::operator-(const DegreeClass& o) const {
  if (pres_ != o.pres_) fail_input("PresentationMismatch", "degree classes from different fans");
  return DegreeClass(pres_, pres_->add(key_, pres_->negate(o.key_)));
}
DegreeClass DegreeClass::operator*(std::int64_t k) const {
  DegreeKey s(key_);
  for (auto& v : s) v *= k;
  return DegreeClass(pres_, std::move(s));
}
bool DegreeClass::is_zero() const {
  return std::all_of(key_.begin(), key_.end(), [](std::int64_t v) { return v == 0; });
}
std::string DegreeClass::to_string() const {
  std::string s = "(";
  const auto f = free_part();
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  const auto t = torsion_part();
  for (std::size_t i = 0; i < t.size(); ++i)
    s += "; " + std::to_string(t[i]) + " mod " + std::to_string(pres_->torsion_orders()[i]);
  return s + ")";
}

// ---- weights ---------------------------------------------------------------------

WeightSystem::WeightSystem(std::vector<std::int64_t> weights) : q_(std::move(weights)) {
  if (q_.size() < 2) fail_input("IllFormedWeights", "need at least two weights");
  for (auto q : q_)
    if (q <= 0) fail_input("IllFormedWeights", "weights must be positive");
  if (q_[0] != 1) fail_input("IllFormedWeights", "q_0 must be 1");
  std::int64_t g = 0;
  for (std::size_t j = 1; j < q_.size(); ++j) {
    g = std::gcd(g, q_[j]);
    m_ = std::lcm(m_, q_[j]);
  }
  if (g != 1) fail_input("IllFormedWeights", "gcd(q_1, ..., q_n) must be 1");
  s_ = std::accumulate(q_.begin(), q_.end(), std::int64_t{0});
}

std::string WeightSystem::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < q_.size(); ++j) s += (j ? "," : "") + std::to_string(q_[j]);
  return s;
}

Fan wps_fan(const WeightSystem& w) {
  const std::size_t n = w.dimension();
  std::vector<IntVector> rays(n + 1, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rays[0][i] = -w.weights()[i + 1];
    rays[i + 1][i] = 1;
  }
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t j = 0; j <= n; ++j)
      if (j != skip) c.push_back(j);
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones), "WPS(" + w.to_string() + ")");
}

// ---- grading ------------------------------------------------------------------------

ToricGrading::ToricGrading(Fan fan) : fan_(std::move(fan)), pres_(chow_presentation(fan_)) {}

DegreeKey ToricGrading::degree_of(std::span<const std::int32_t> exponents) const {
  IntVector x(exponents.begin(), exponents.end());
  return pres_->project(x);
}

std::vector<Exponents> ToricGrading::monomials(const DegreeKey& degree) const {
  const TorusDivisor d{pres_->lift(degree)};
  const LatticePolytope p = divisor_polytope(fan_, d);
  std::vector<Exponents> out;
  if (p.is_empty()) return out;
  const auto& rays = fan_.rays();
  for_each_integer_point(fan_.dimension(), p.inequalities(), [&](std::span<const std::int64_t> m) {
    Exponents e(rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j) {
      std::int64_t v = d.coefficients[j];
      for (std::size_t i = 0; i < m.size(); ++i) v += m[i] * rays[j][i];
      e[j] = static_cast<std::int32_t>(v);
    }
    out.push_back(std::move(e));
  });
  std::sort(out.begin(), out.end(), graded_lex_greater);
  return out;
}

DegreeClass monomial_degree(const ToricGrading& g, std::span<const std::int64_t> exponents) {
  for (auto e : exponents)
    if (e < 0) fail_input("BadExponent", "exponents must be nonnegative");
  return DegreeClass(g.presentation(), g.presentation()->project(exponents));
}

DegreeClass divisor_class(const ToricGrading& g, const TorusDivisor& d) {
  return DegreeClass(g.presentation(), g.presentation()->project(d.coefficients));
}

DegreeClass beta0(const ToricGrading& g) {
  const IntVector ones(g.fan().ray_count(), 1);
  return monomial_degree(g, ones);
}

// ---- Cartier / ample ------------------------------------------------------------------

CartierData is_cartier(const Fan& fan, const TorusDivisor& d) {
  if (d.coefficients.size() != fan.ray_count()) fail_input("BadDivisor", "divisor length differs from ray count");
  CartierData out;
  const std::size_t n = fan.dimension();
  for (const auto& cone : fan.max_cones()) {
    const auto inv = invert(cone_matrix(fan, cone));
    if (!inv) fail_internal("SingularCone", "validated cone became singular");
    IntVector u(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = 0;
      for (std::size_t k = 0; k < n; ++k) v -= (*inv)[i][k] * static_cast<long>(d.coefficients[cone[k]]);
      if (v.get_den() != 1) {
        out.witness.clear();
        return out;
      }
      u[i] = to_int64(v.get_num());
    }
    out.witness.push_back(std::move(u));
  }
  out.cartier = true;
  return out;
}

bool is_ample_wps(const WeightSystem&, std::int64_t d) { return d > 0; }

bool is_ample_toric(const Fan& fan, const TorusDivisor& d) {
  const CartierData c = is_cartier(fan, d);
  if (!c.cartier) fail_hypothesis("NotCartier", "ampleness test needs a Cartier divisor");
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
    const auto& cone = fan.max_cones()[k];
    const auto& u = c.witness[k];
    for (std::size_t j = 0; j < fan.ray_count(); ++j) {
      if (std::binary_search(cone.begin(), cone.end(), j)) continue;
      std::int64_t v = d.coefficients[j];
      for (std::size_t i = 0; i < fan.dimension(); ++i) v += u[i] * fan.rays()[j][i];
      if (v <= 0) return false;
    }
  }
  return true;
}

LatticePolytope divisor_polytope(const Fan& fan, const TorusDivisor& d) {
  if (d.coefficients.size() != fan.ray_count()) fail_input("BadDivisor", "divisor length differs from ray count");
  std::vector<Inequality> ineqs;
  for (std::size_t j = 0; j < fan.ray_count(); ++j) ineqs.push_back({fan.rays()[j], d.coefficients[j]});
  return LatticePolytope(fan.dimension(), std::move(ineqs));
}

}  // namespace ivhs
