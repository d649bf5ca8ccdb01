#include "ivhs/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ivhs/error.hpp"

namespace ivhs {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail_input("RaggedMatrix", "rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail_input("RaggedMatrix", "rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) fail_input("ShapeMismatch", "matrix product with incompatible shapes");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) fail_input("ShapeMismatch", "matrix-vector product with incompatible shapes");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Scales a rational row to a primitive integer row.
std::vector<Integer> primitive_integer_row(std::span<const Rational> row) {
  Integer common = 1;
  for (const auto& x : row) {
    if (sgn(x) != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out(row.size());
  Integer g = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (common / row[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = primitive_integer_row(m.row(i));
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; }))
      a.push_back(std::move(row));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t k = 0; k < cols && r < rows; ++k) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      if (best == rows || cmpabs(a[i][k], a[best][k]) < 0) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const Integer& pivot = a[r][k];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = a[i][k];
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer v = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous = pivot;
    ++r;
  }
  return r;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RationalMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t k = 0; k < cols && r < rows; ++k) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a(i, k)) != 0) {
        best = i;
        break;
      }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
    const Rational inv = 1 / a(r, k);
    for (std::size_t j = k; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, k)) == 0) continue;
      const Rational factor = a(i, k);
      for (std::size_t j = k; j < cols; ++j) a(i, j) -= factor * a(r, j);
    }
    pivot_cols.push_back(k);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---- polynomials -----------------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0) out << mag.get_str();
    if (k >= 1) out << (unit ? "" : "*") << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RationalPolynomial interpolate_polynomial(std::span<const std::pair<long, Rational>> points) {
  const std::size_t n = points.size();
  std::set<long> nodes;
  for (const auto& [x, y] : points)
    if (!nodes.insert(x).second) fail_input("DuplicateNodes", "interpolation node " + std::to_string(x) + " repeated");
  if (n == 0) return {};
  // Newton divided differences.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
      if (i == level) break;
    }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Rational> coeffs{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    const Rational node = points[i].first;
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= node * coeffs[k];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return RationalPolynomial(std::move(coeffs));
}

// ---- integer matrices --------------------------------------------------------

IntegerMatrix integer_identity(std::size_t n) {
  IntegerMatrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntegerMatrix out(a.size(), std::vector<Integer>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::vector<Integer> multiply(const IntegerMatrix& a, std::span<const Integer> v) {
  std::vector<Integer> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

namespace {

// Row/column operations that keep a transform and its inverse in sync.
struct RowOps {
  IntegerMatrix& a;
  IntegerMatrix& t;
  IntegerMatrix& t_inv;

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(t[i], t[j]);
    for (auto& row : t_inv) std::swap(row[i], row[j]);
  }
  // row_i += k * row_j
  void add(std::size_t i, std::size_t j, const Integer& k) {
    if (sgn(k) == 0) return;
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += k * a[j][c];
    for (std::size_t c = 0; c < t[i].size(); ++c) t[i][c] += k * t[j][c];
    for (auto& row : t_inv) row[j] -= k * row[i];
  }
  void negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : t[i]) x = -x;
    for (auto& row : t_inv) row[i] = -row[i];
  }
};

struct ColOps {
  IntegerMatrix& a;
  IntegerMatrix& t;      // a <- a * C, t <- t * C
  IntegerMatrix& t_inv;  // t_inv <- C^{-1} * t_inv

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : t) std::swap(row[i], row[j]);
    std::swap(t_inv[i], t_inv[j]);
  }
  // col_i += k * col_j
  void add(std::size_t i, std::size_t j, const Integer& k) {
    if (sgn(k) == 0) return;
    for (auto& row : a) row[i] += k * row[j];
    for (auto& row : t) row[i] += k * row[j];
    for (std::size_t c = 0; c < t_inv[j].size(); ++c) t_inv[j][c] -= k * t_inv[i][c];
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input.front().size();
  SmithForm out;
  IntegerMatrix a = input;
  out.left = integer_identity(rows);
  out.left_inverse = integer_identity(rows);
  out.right = integer_identity(cols);
  out.right_inverse = integer_identity(cols);
  RowOps row_ops{a, out.left, out.left_inverse};
  ColOps col_ops{a, out.right, out.right_inverse};

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && (bi == rows || cmpabs(a[i][j], a[bi][bj]) < 0)) bi = i, bj = j;
      if (bi == rows) break;
      row_ops.swap(t, bi);
      col_ops.swap(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        row_ops.add(i, t, -floor_div(a[i][t], a[t][t]));
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        col_ops.add(j, t, -floor_div(a[t][j], a[t][t]));
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            row_ops.add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(a[t][t]) < 0) row_ops.negate(t);
  }
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a[t][t];
  return out;
}

HermiteForm hermite_normal_form(const IntegerMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input.front().size();
  HermiteForm out;
  out.hermite = input;
  out.transform = integer_identity(rows);
  out.transform_inverse = integer_identity(rows);
  RowOps ops{out.hermite, out.transform, out.transform_inverse};
  auto& a = out.hermite;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(a[i][c]) != 0 && (best == rows || cmpabs(a[i][c], a[best][c]) < 0)) best = i;
      if (best == rows) break;
      ops.swap(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(a[i][c]) == 0) continue;
        ops.add(i, r, -floor_div(a[i][c], a[r][c]));
        if (sgn(a[i][c]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(a[r][c]) == 0) continue;
    if (sgn(a[r][c]) < 0) ops.negate(r);
    for (std::size_t i = 0; i < r; ++i) ops.add(i, r, -floor_div(a[i][c], a[r][c]));
    ++r;
  }
  return out;
}

}  // namespace ivhs
