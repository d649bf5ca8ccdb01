#include "ivhs/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "ivhs/error.hpp"

namespace ivhs {

std::int64_t Inequality::evaluate(std::span<const std::int64_t> x) const {
  __int128 s = constant;
  for (std::size_t i = 0; i < normal.size(); ++i) s += static_cast<__int128>(normal[i]) * x[i];
  return static_cast<std::int64_t>(s);
}

namespace {

// Fourier–Motzkin over exact data: primitive integer normal, rational constant.
struct Constraint {
  std::vector<Integer> a;
  Rational c;
};
using System = std::vector<Constraint>;

bool normalize(Constraint& k) {
  Integer g = 0;
  for (const auto& x : k.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return false;
  if (g != 1) {
    for (auto& x : k.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    k.c /= g;
  }
  return true;
}

System to_system(std::span<const Inequality> ineqs, std::size_t extra_vars = 0) {
  System sys;
  for (const auto& q : ineqs) {
    Constraint k;
    k.a.reserve(q.normal.size() + extra_vars);
    for (auto x : q.normal) k.a.emplace_back(static_cast<long>(x));
    k.a.resize(q.normal.size() + extra_vars);
    k.c = static_cast<long>(q.constant);
    if (normalize(k)) sys.push_back(std::move(k));
    else if (sgn(k.c) < 0) sys.push_back(std::move(k));  // 0 >= positive: kept to flag infeasibility
  }
  return sys;
}

// Removes variable `var`.  Returns false when the system is infeasible.
bool eliminate(System& sys, std::size_t var) {
  std::map<std::vector<Integer>, Rational> tightest;
  std::vector<const Constraint*> pos, neg;
  auto keep = [&](Constraint&& k) -> bool {
    if (!normalize(k)) return sgn(k.c) >= 0;
    auto [it, inserted] = tightest.emplace(std::move(k.a), k.c);
    if (!inserted && k.c < it->second) it->second = k.c;
    return true;
  };
  for (const auto& k : sys) {
    if (std::all_of(k.a.begin(), k.a.end(), [](const Integer& x) { return sgn(x) == 0; })) {
      if (sgn(k.c) < 0) return false;
      continue;
    }
    const int s = sgn(k.a[var]);
    if (s > 0) pos.push_back(&k);
    else if (s < 0) neg.push_back(&k);
    else if (!keep(Constraint(k))) return false;
  }
  for (const auto* p : pos)
    for (const auto* n : neg) {
      const Integer wp = -n->a[var];
      const Integer wn = p->a[var];
      Constraint k;
      k.a.resize(p->a.size());
      for (std::size_t i = 0; i < k.a.size(); ++i) k.a[i] = wp * p->a[i] + wn * n->a[i];
      k.a[var] = 0;
      k.c = Rational(wp) * p->c + Rational(wn) * n->c;
      if (!keep(std::move(k))) return false;
    }
  System out;
  out.reserve(tightest.size());
  for (auto& [a, c] : tightest) out.push_back({a, c});
  sys = std::move(out);
  return true;
}

struct Range {
  bool feasible = true;
  std::optional<Rational> lo, hi;
};

// Range of the linear functional <f, x> over the polyhedron.
Range range_of(std::span<const Inequality> ineqs, std::size_t n, std::span<const std::int64_t> f,
               std::int64_t f_constant = 0) {
  System sys = to_system(ineqs, 1);
  Constraint upper, lower;  // z - <f,x> - f0 >= 0 and <f,x> + f0 - z >= 0
  upper.a.assign(n + 1, 0);
  lower.a.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    upper.a[i] = static_cast<long>(-f[i]);
    lower.a[i] = static_cast<long>(f[i]);
  }
  upper.a[n] = 1;
  lower.a[n] = -1;
  upper.c = static_cast<long>(-f_constant);
  lower.c = static_cast<long>(f_constant);
  sys.push_back(upper);
  sys.push_back(lower);
  Range r;
  for (std::size_t v = 0; v < n; ++v)
    if (!eliminate(sys, v)) {
      r.feasible = false;
      return r;
    }
  for (const auto& k : sys) {
    const int s = sgn(k.a[n]);
    if (s == 0) {
      if (sgn(k.c) < 0) {
        r.feasible = false;
        return r;
      }
      continue;
    }
    const Rational bound = -k.c / Rational(k.a[n]);
    if (s > 0) {
      if (!r.lo || bound > *r.lo) r.lo = bound;
    } else {
      if (!r.hi || bound < *r.hi) r.hi = bound;
    }
  }
  if (r.lo && r.hi && *r.lo > *r.hi) r.feasible = false;
  return r;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) fail_input("Overflow", "polytope data exceeds 64-bit range");
  return x.get_si();
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

void for_each_integer_point(std::size_t dim, std::span<const Inequality> system,
                            const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (dim == 0) return;
  // levels[k]: constraints on x_0..x_k with nonzero x_k coefficient, from the
  // projection that eliminated x_{k+1}..x_{dim-1}.
  struct Row {
    std::vector<std::int64_t> a;
    std::int64_t c;
  };
  std::vector<std::vector<Row>> levels(dim);
  System sys = to_system(system);
  for (std::size_t k = dim; k-- > 0;) {
    for (const auto& q : sys) {
      if (sgn(q.a[k]) == 0) continue;
      Row row;
      row.a.resize(k + 1);
      for (std::size_t i = 0; i <= k; ++i) row.a[i] = to_int64(q.a[i]);
      row.c = to_int64(floor_of(q.c));  // integer points only: tighten the constant
      levels[k].push_back(std::move(row));
    }
    if (k > 0 && !eliminate(sys, k)) return;
  }
  for (const auto& q : sys)
    if (std::all_of(q.a.begin(), q.a.end(), [](const Integer& x) { return sgn(x) == 0; }) && sgn(q.c) < 0) return;

  LatticePoint x(dim);
  std::vector<std::int64_t> upper(dim);
  auto bounds = [&](std::size_t k, std::int64_t& lo, std::int64_t& hi) {
    bool has_lo = false, has_hi = false;
    for (const auto& row : levels[k]) {
      __int128 s = row.c;
      for (std::size_t i = 0; i < k; ++i) s += static_cast<__int128>(row.a[i]) * x[i];
      const auto rest = static_cast<std::int64_t>(s);
      const std::int64_t coef = row.a[k];
      if (coef > 0) {
        const std::int64_t b = ceil_div(-rest, coef);
        lo = has_lo ? std::max(lo, b) : b;
        has_lo = true;
      } else {
        const std::int64_t b = floor_div(rest, -coef);
        hi = has_hi ? std::min(hi, b) : b;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) fail_internal("Unbounded", "integer enumeration over an unbounded system");
  };

  std::size_t k = 0;
  std::int64_t lo, hi;
  bounds(0, lo, hi);
  x[0] = lo;
  upper[0] = hi;
  for (;;) {
    if (x[k] > upper[k]) {
      if (k == 0) return;
      --k;
      ++x[k];
      continue;
    }
    if (k + 1 == dim) {
      visit(x);
      ++x[k];
      continue;
    }
    ++k;
    bounds(k, lo, hi);
    x[k] = lo;
    upper[k] = hi;
  }
}

LatticePolytope::LatticePolytope(std::size_t ambient_dim, std::vector<Inequality> inequalities)
    : ambient_dim_(ambient_dim), original_(std::move(inequalities)) {
  if (ambient_dim_ == 0) fail_input("BadPolytope", "ambient dimension must be positive");
  for (const auto& q : original_)
    if (q.normal.size() != ambient_dim_) fail_input("BadPolytope", "inequality length differs from ambient dimension");

  box_.resize(ambient_dim_);
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    std::vector<std::int64_t> e(ambient_dim_, 0);
    e[i] = 1;
    const Range r = range_of(original_, ambient_dim_, e);
    if (!r.feasible) {
      empty_ = true;
      inequalities_ = original_;
      box_.assign(ambient_dim_, {0, -1});
      return;
    }
    if (!r.lo || !r.hi) fail_input("UnboundedPolytope", "inequalities do not define a bounded set");
    box_[i] = {to_int64(ceil_of(*r.lo)), to_int64(floor_of(*r.hi))};
  }

  // Sequential redundancy removal.
  std::vector<Inequality> kept = original_;
  for (std::size_t k = 0; k < kept.size();) {
    std::vector<Inequality> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(kept[j]);
    const Range r = range_of(others, ambient_dim_, kept[k].normal, kept[k].constant);
    if (r.feasible && r.lo && sgn(*r.lo) >= 0) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    else ++k;
  }
  inequalities_ = std::move(kept);

  std::vector<RationalVector> equality_normals;
  for (std::size_t k = 0; k < inequalities_.size(); ++k) {
    const Range r = range_of(inequalities_, ambient_dim_, inequalities_[k].normal, inequalities_[k].constant);
    if (r.hi && sgn(*r.hi) == 0) {
      implicit_.push_back(k);
      RationalVector row;
      for (auto x : inequalities_[k].normal) row.emplace_back(static_cast<long>(x));
      equality_normals.push_back(std::move(row));
    }
  }
  const std::size_t eq_rank = equality_normals.empty() ? 0 : rank(RationalMatrix::from_rows(equality_normals));
  dimension_ = static_cast<int>(ambient_dim_ - eq_rank);
}

LatticePolytope LatticePolytope::dilate(std::int64_t t) const {
  auto ineqs = original_;
  for (auto& q : ineqs) q.constant *= t;
  return LatticePolytope(ambient_dim_, std::move(ineqs));
}

LatticePolytope LatticePolytope::translate(std::span<const std::int64_t> shift) const {
  auto ineqs = original_;
  for (auto& q : ineqs) {
    __int128 s = q.constant;
    for (std::size_t i = 0; i < ambient_dim_; ++i) s -= static_cast<__int128>(q.normal[i]) * shift[i];
    q.constant = static_cast<std::int64_t>(s);
  }
  return LatticePolytope(ambient_dim_, std::move(ineqs));
}

namespace {

std::vector<Inequality> relative_interior_system(const LatticePolytope& p) {
  std::vector<Inequality> sys;
  const auto& ineqs = p.inequalities();
  const auto& eq = p.implicit_equalities();
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    if (std::find(eq.begin(), eq.end(), k) != eq.end()) {
      sys.push_back(ineqs[k]);
      Inequality neg = ineqs[k];
      for (auto& x : neg.normal) x = -x;
      neg.constant = -neg.constant;
      sys.push_back(std::move(neg));
    } else {
      Inequality strict = ineqs[k];
      strict.constant -= 1;
      sys.push_back(std::move(strict));
    }
  }
  return sys;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const LatticePolytope& p, bool strict) {
  std::vector<LatticePoint> out;
  if (p.is_empty()) return out;
  const auto sys = strict ? relative_interior_system(p) : p.inequalities();
  for_each_integer_point(p.ambient_dimension(), sys,
                         [&](std::span<const std::int64_t> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

std::uint64_t count_lattice_points(const LatticePolytope& p, bool strict) {
  if (p.is_empty()) return 0;
  const auto sys = strict ? relative_interior_system(p) : p.inequalities();
  std::uint64_t count = 0;
  for_each_integer_point(p.ambient_dimension(), sys, [&](std::span<const std::int64_t>) { ++count; });
  return count;
}

RationalPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  if (p.is_empty()) fail_input("EmptyPolytope", "Ehrhart polynomial of the empty set");
  const int d = p.dimension();
  std::vector<std::pair<long, Rational>> nodes;
  for (int t = 0; t <= d; ++t)
    nodes.emplace_back(t, Rational(static_cast<unsigned long>(count_lattice_points(p.dilate(t), false))));
  RationalPolynomial e = interpolate_polynomial(nodes);
  if (e(0) != 1) fail_internal("NotLatticePolytope", "E(0) != 1");
  for (int t = d + 1; t <= d + 2; ++t) {
    const Rational actual(static_cast<unsigned long>(count_lattice_points(p.dilate(t), false)));
    if (e(t) != actual)
      fail_input("NotLatticePolytope",
                 "lattice counts are not polynomial of degree " + std::to_string(d) + " (vertices not integral?)");
  }
  return e;
}

std::uint64_t interior_count(const LatticePolytope& p, const RationalPolynomial& ehrhart, std::int64_t t) {
  if (t < 1) fail_input("BadDilation", "interior_count needs t >= 1");
  Rational v = ehrhart(Rational(static_cast<long>(-t)));
  if (p.dimension() % 2 != 0) v = -v;
  if (v.get_den() != 1 || sgn(v) < 0) fail_internal("Reciprocity", "(-1)^d E(-t) is not a nonnegative integer");
  return v.get_num().get_ui();
}

std::uint64_t interior_count(const LatticePolytope& p, std::int64_t t) {
  return interior_count(p, ehrhart_polynomial(p), t);
}

std::vector<std::uint64_t> facet_interior_counts(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) fail_input("NotFullDimensional", "facet counts need a full-dimensional polytope");
  const auto& ineqs = p.inequalities();
  std::vector<std::uint64_t> counts;
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    std::vector<Inequality> sys;
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      Inequality q = ineqs[j];
      if (j != k) q.constant -= 1;
      sys.push_back(q);
    }
    Inequality neg = ineqs[k];
    for (auto& x : neg.normal) x = -x;
    neg.constant = -neg.constant;
    sys.push_back(std::move(neg));
    std::uint64_t count = 0;
    for_each_integer_point(p.ambient_dimension(), sys, [&](std::span<const std::int64_t>) { ++count; });
    counts.push_back(count);
  }
  return counts;
}

Rational normalized_volume(const LatticePolytope& p) {
  if (p.is_empty()) return 0;
  return ehrhart_polynomial(p).coefficient(p.ambient_dimension());
}

}  // namespace ivhs
