#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ivhs {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.  Entries are kept canonical
/// (lowest terms, positive denominator) by GMP.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix& other) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.  Each row is first
/// scaled to a primitive integer row; the pivot in each column is the entry
/// of smallest nonzero magnitude.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space {v : m v = 0}; exactly cols - rank vectors.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial has an empty coefficient list.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational operator()(const Rational& t) const;

  bool operator==(const RationalPolynomial&) const = default;
  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the given nodes.
/// Throws InvalidInput/DuplicateNodes when two nodes coincide.
RationalPolynomial interpolate_polynomial(std::span<const std::pair<long, Rational>> points);

// ---- integer matrices -------------------------------------------------------

using IntegerMatrix = std::vector<std::vector<Integer>>;

IntegerMatrix integer_identity(std::size_t n);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Integer> multiply(const IntegerMatrix& a, std::span<const Integer> v);

/// Smith normal form with transforms: left * a * right = diagonal, where
/// left and right are unimodular and diagonal entries are nonnegative with
/// d_1 | d_2 | ... .  The inverses of both transforms are returned as well.
struct SmithForm {
  IntegerMatrix left, left_inverse;
  IntegerMatrix right, right_inverse;
  std::vector<Integer> diagonal;  // min(rows, cols) entries
};
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Row-style Hermite normal form: transform * a = hermite with transform
/// unimodular, hermite in row echelon form, pivots positive, and entries
/// above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntegerMatrix hermite;
  IntegerMatrix transform, transform_inverse;
};
HermiteForm hermite_normal_form(const IntegerMatrix& a);

}  // namespace ivhs
