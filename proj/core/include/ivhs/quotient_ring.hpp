#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ivhs/echelon.hpp"
#include "ivhs/error.hpp"
#include "ivhs/grading.hpp"
#include "ivhs/polynomial.hpp"

namespace ivhs {

/// Graded pieces of S / I where I is generated by homogeneous polynomials,
/// with coefficients reduced into Field.  Each piece keeps a semi-echelon
/// basis of I_gamma in the monomial basis of S_gamma; the non-pivot
/// monomials form the standard basis of the quotient.
///
/// Generators are multiplied into a piece in the order given, so listing
/// monomial generators first keeps later reductions short.
template <class Field>
class QuotientRing {
 public:
  using Echelon = SemiEchelon<Field>;
  using Value = typename Field::Value;
  using Sparse = typename Echelon::SparseVector;

  struct Piece {
    DegreeKey degree;
    std::vector<Exponents> monomials;
    std::unordered_map<Exponents, std::uint32_t, ExponentsHash> index;
    std::unique_ptr<Echelon> ideal;
    std::vector<std::uint32_t> standard;          // monomial indices of the standard basis
    std::vector<std::int32_t> standard_position;  // monomial index -> position in standard, or -1
    std::vector<std::optional<Sparse>> nf;        // cached normal forms, by monomial index

    std::size_t ambient_dim() const { return monomials.size(); }
    std::size_t ideal_dim() const { return ideal->rank(); }
    std::size_t quotient_dim() const { return standard.size(); }
  };

  QuotientRing(const Grading& grading, const std::vector<GradedPolynomial>& generators, Field field)
      : grading_(grading), field_(std::move(field)) {
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      Generator gen{g.degree, {}};
      for (const auto& [e, c] : g.terms) {
        Value v = field_.from_rational(c);
        if (!Field::is_zero(v)) gen.terms.emplace_back(e, std::move(v));
      }
      if (!gen.terms.empty()) generators_.push_back(std::move(gen));
    }
  }

  const Field& field() const { return field_; }
  const Grading& grading() const { return grading_; }

  Piece& piece(const DegreeKey& degree) {
    auto it = pieces_.find(degree);
    if (it != pieces_.end()) return *it->second;
    auto p = std::make_unique<Piece>();
    p->degree = degree;
    p->monomials = grading_.monomials(degree);
    const std::size_t n = p->monomials.size();
    p->index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p->index.emplace(p->monomials[i], static_cast<std::uint32_t>(i));
    p->ideal = std::make_unique<Echelon>(field_, n);
    Exponents scratch(grading_.variable_count());
    for (const auto& g : generators_) {
      if (p->ideal->rank() == n) break;
      const auto& mults = monomials(grading_.subtract(degree, g.degree));
      for (const auto& m : mults) {
        Sparse v;
        v.reserve(g.terms.size());
        for (const auto& [e, c] : g.terms) {
          for (std::size_t j = 0; j < scratch.size(); ++j) scratch[j] = m[j] + e[j];
          const auto found = p->index.find(scratch);
          if (found == p->index.end()) fail_internal("GradingMismatch", "product monomial missing from its piece");
          v.push_back({found->second, c});
        }
        p->ideal->insert(v);
        if (p->ideal->rank() == n) break;
      }
    }
    p->standard_position.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (!p->ideal->is_pivot(i)) {
        p->standard_position[i] = static_cast<std::int32_t>(p->standard.size());
        p->standard.push_back(static_cast<std::uint32_t>(i));
      }
    p->nf.resize(n);
    Piece& ref = *p;
    pieces_.emplace(degree, std::move(p));
    return ref;
  }

  /// Normal form of a monomial of the piece, indexed by standard position.
  const Sparse& monomial_normal_form(Piece& p, std::uint32_t i) {
    auto& slot = p.nf[i];
    if (!slot) {
      Sparse out;
      if (p.standard_position[i] >= 0) {
        out.push_back({static_cast<std::size_t>(p.standard_position[i]), Field::one()});
      } else {
        Sparse v{{i, Field::one()}};
        for (auto& e : p.ideal->normal_form(v))
          out.push_back({static_cast<std::size_t>(p.standard_position[e.index]), std::move(e.value)});
      }
      slot = std::move(out);
    }
    return *slot;
  }

  /// Normal form of a homogeneous polynomial, indexed by standard position.
  Sparse normal_form(const GradedPolynomial& f) {
    Piece& p = piece(f.degree);
    Sparse v;
    for (const auto& [e, c] : f.terms) {
      const auto found = p.index.find(e);
      if (found == p.index.end()) fail_input("NotHomogeneous", "monomial outside the graded piece");
      Value x = field_.from_rational(c);
      if (!Field::is_zero(x)) v.push_back({found->second, std::move(x)});
    }
    Sparse out;
    for (auto& e : p.ideal->normal_form(v))
      out.push_back({static_cast<std::size_t>(p.standard_position[e.index]), std::move(e.value)});
    return out;
  }

  /// Rank of R_e -> Hom(R_c, R_{c+e}), a -> (b -> ab).  Stops as soon as the
  /// map is known to be injective.
  std::size_t injectivity_rank(const DegreeKey& e, const DegreeKey& c) {
    Piece& pe = piece(e);
    Piece& pc = piece(c);
    Piece& pt = piece(grading_.add(e, c));
    const std::size_t de = pe.quotient_dim();
    if (de == 0) return 0;
    Echelon image(field_, de);
    std::vector<Sparse> columns(pt.quotient_dim());
    std::vector<std::size_t> touched;
    Exponents scratch(grading_.variable_count());
    for (const auto k : pc.standard) {
      const Exponents& b = pc.monomials[k];
      touched.clear();
      for (std::size_t i = 0; i < de; ++i) {
        const Exponents& a = pe.monomials[pe.standard[i]];
        for (std::size_t j = 0; j < scratch.size(); ++j) scratch[j] = a[j] + b[j];
        const auto& nf = monomial_normal_form(pt, pt.index.at(scratch));
        for (const auto& entry : nf) {
          auto& col = columns[entry.index];
          if (col.empty()) touched.push_back(entry.index);
          col.push_back({i, entry.value});
        }
      }
      for (const auto l : touched) {
        image.insert(columns[l]);
        columns[l].clear();
      }
      if (image.rank() == de) {
        for (const auto l : touched) columns[l].clear();
        return de;
      }
    }
    return image.rank();
  }

  /// Dimension of the span of all products R_e * R_c inside R_{c+e}.
  std::size_t pairing_rank(const DegreeKey& e, const DegreeKey& c) {
    Piece& pe = piece(e);
    Piece& pc = piece(c);
    Piece& pt = piece(grading_.add(e, c));
    const std::size_t dt = pt.quotient_dim();
    if (dt == 0 || pe.quotient_dim() == 0 || pc.quotient_dim() == 0) return 0;
    Echelon image(field_, dt);
    std::vector<bool> seen(pt.ambient_dim(), false);
    Exponents scratch(grading_.variable_count());
    for (const auto i : pe.standard) {
      const Exponents& a = pe.monomials[i];
      for (const auto k : pc.standard) {
        const Exponents& b = pc.monomials[k];
        for (std::size_t j = 0; j < scratch.size(); ++j) scratch[j] = a[j] + b[j];
        const std::uint32_t idx = pt.index.at(scratch);
        if (seen[idx]) continue;
        seen[idx] = true;
        image.insert(monomial_normal_form(pt, idx));
        if (image.rank() == dt) return dt;
      }
    }
    return image.rank();
  }

 private:
  struct Generator {
    DegreeKey degree;
    std::vector<std::pair<Exponents, Value>> terms;
  };

  const std::vector<Exponents>& monomials(const DegreeKey& degree) {
    auto it = monomial_cache_.find(degree);
    if (it == monomial_cache_.end()) it = monomial_cache_.emplace(degree, grading_.monomials(degree)).first;
    return it->second;
  }

  const Grading& grading_;
  Field field_;
  std::vector<Generator> generators_;
  std::map<DegreeKey, std::unique_ptr<Piece>> pieces_;
  std::map<DegreeKey, std::vector<Exponents>> monomial_cache_;
};

}  // namespace ivhs
