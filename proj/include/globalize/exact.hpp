#pragma once

// Exact scalars over Q or F_p and dense linear algebra on top of them.
//
// Everything here is value-typed and free of rounding. Subspaces are kept in
// canonical reduced row-echelon form so that equality is a structural
// comparison of bases.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "globalize/error.hpp"

namespace globalize {

/// Ground field descriptor: the rationals, or F_p for a prime p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
      throw Error("BadField", "prime modulus out of range: " + std::to_string(p));
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw Error("BadField", std::to_string(p) + " is not prime");
    }
    return Field{p};
  }

  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.substr(0, 3) == "Fp:") {
      std::uint64_t p = 0;
      for (char c : s.substr(3)) {
        if (c < '0' || c > '9') throw Error("BadField", std::string(s));
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p >= (std::uint64_t{1} << 32)) throw Error("BadField", std::string(s));
      }
      if (s.size() == 3) throw Error("BadField", std::string(s));
      return prime(p);
    }
    throw Error("BadField", std::string(s));
  }

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An element of Q or F_p, tagged with its field.
class Scalar {
 public:
  Scalar() = default;

  Scalar(Field f, long v) : field_(f) {
    if (f.is_rational()) {
      q_ = v;
    } else {
      const auto p = static_cast<long long>(f.characteristic());
      long long r = static_cast<long long>(v) % p;
      r_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
    }
  }

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  /// Maps a rational into the field; in F_p the denominator must be a unit.
  static Scalar from_rational(Field f, const mpq_class& q) {
    Scalar s(f, 0);
    if (f.is_rational()) {
      s.q_ = q;
      s.q_.canonicalize();
      return s;
    }
    const mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw Error("DivisionByZero", q.get_str() + " in " + f.to_string());
    Scalar n(f, static_cast<long>(num.get_ui()));
    Scalar d(f, static_cast<long>(den.get_ui()));
    return n / d;
  }

  /// Parses "p/q", an integer, or "n mod p" (the modulus must match the field).
  static Scalar parse(Field f, std::string_view text) {
    std::string s(text);
    auto mod = s.find(" mod ");
    if (mod != std::string::npos) {
      if (f.is_rational()) throw Error("BadScalar", s + " is not a rational");
      const std::string modulus = s.substr(mod + 5);
      if (modulus != std::to_string(f.characteristic())) {
        throw Error("BadScalar", s + " does not live in " + f.to_string());
      }
      s = s.substr(0, mod);
    }
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw Error("BadScalar", std::string(text));
    if (q.get_den() == 0) throw Error("BadScalar", std::string(text));
    q.canonicalize();
    return from_rational(f, q);
  }

  Field field() const noexcept { return field_; }

  bool is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

  Scalar operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) {
      s.q_ = -q_;
    } else if (r_ != 0) {
      s.r_ = field_.characteristic() - r_;
    }
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      r_ = (r_ + o.r_) % field_.characteristic();
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      r_ = (r_ * o.r_) % field_.characteristic();
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of 0", ErrorKind::Math);
    Scalar s = *this;
    if (field_.is_rational()) {
      s.q_ = 1 / q_;
      return s;
    }
    // extended Euclid on (r, p)
    long long a = static_cast<long long>(r_), m = static_cast<long long>(field_.characteristic());
    long long x0 = 1, x1 = 0;
    while (m != 0) {
      const long long q = a / m;
      std::tie(a, m) = std::pair{m, a - q * m};
      std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
    }
    const auto p = static_cast<long long>(field_.characteristic());
    s.r_ = static_cast<std::uint64_t>(((x0 % p) + p) % p);
    return s;
  }

  /// Canonical serialization: "p/q" in lowest terms (q > 0), or "n mod p".
  std::string to_string() const {
    if (field_.is_rational()) return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

 private:
  void check(const Scalar& o) const {
    if (!(field_ == o.field_)) {
      detail::internal_error("FieldMismatch", field_.to_string() + " vs " + o.field_.to_string());
    }
  }

  Field field_;
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

using Vec = std::vector<Scalar>;

inline Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) detail::internal_error("DimensionMismatch", "vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) detail::internal_error("DimensionMismatch", "vector difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Scalar& c, Vec v) {
  for (auto& x : v) x *= c;
  return v;
}

/// Dense row-major matrix. As a linear map it sends column vectors of length
/// cols() to column vectors of length rows().
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }

  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(f, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) detail::internal_error("DimensionMismatch", "from_columns");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) detail::internal_error("DimensionMismatch", "from_rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vec column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec operator*(const Vec& v) const {
    if (v.size() != cols_) detail::internal_error("DimensionMismatch", "matrix-vector product");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& a = (*this)(r, c);
        if (!a.is_zero()) out[r] += a * v[c];
      }
    }
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) detail::internal_error("DimensionMismatch", "matrix product");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(r, k);
        if (a.is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          const Scalar& b = o(k, c);
          if (!b.is_zero()) out(r, c) += a * b;
        }
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) detail::internal_error("DimensionMismatch", "matrix sum");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) detail::internal_error("DimensionMismatch", "matrix difference");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }

  friend Matrix operator*(const Scalar& c, Matrix m) {
    for (auto& x : m.data_) x *= c;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; index (i, j) of the factors maps to i * size2 + j.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

/// Kronecker product of vectors, same index convention as kron().
inline Vec kron(const Vec& a, const Vec& b) {
  Field f = a.empty() ? (b.empty() ? Field{} : b.front().field()) : a.front().field();
  Vec out = zero_vec(f, a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
inline RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  auto e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// A linear subspace of F^n stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& generators) {
    Subspace s(f, ambient);
    if (generators.empty()) return s;
    auto e = rref(Matrix::from_rows(f, ambient, generators));
    s.pivots_ = e.pivots;
    for (std::size_t r = 0; r < e.rank(); ++r) s.basis_.push_back(e.reduced.row(r));
    return s;
  }

  static Subspace full(Field f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      s.basis_.push_back(unit_vec(f, ambient, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Columns are the basis vectors: the inclusion map F^dim -> F^ambient.
  Matrix basis_matrix() const { return Matrix::from_columns(field_, ambient_, basis_); }

  /// Residual of v after eliminating all pivot coordinates.
  Vec reduce(Vec v) const {
    check_vec(v);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (!basis_[r][j].is_zero()) v[j] -= c * basis_[r][j];
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& o) const {
    check_same(o);
    return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Coordinates of a member with respect to basis(); throws if v is not a member.
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) detail::internal_error("NotInSubspace", "coordinates of a non-member");
    Vec c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  Subspace operator+(const Subspace& o) const {
    check_same(o);
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, gens);
  }

  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_vec(const Vec& v) const {
    if (v.size() != ambient_) {
      throw Error("DimensionMismatch",
                  "vector of length " + std::to_string(v.size()) + " in ambient " + std::to_string(ambient_));
    }
  }
  void check_same(const Subspace& o) const {
    if (o.ambient_ != ambient_ || !(o.field_ == field_)) {
      throw Error("DimensionMismatch",
                  "ambient " + std::to_string(ambient_) + " vs " + std::to_string(o.ambient_));
    }
  }

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = unit_vec(m.field(), m.cols(), f);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), gens);
}

/// Span of the columns of m.
inline Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

// x in a∩b  <=>  x = A s = B t, so (s, t) lies in the kernel of [A | -B].
inline Subspace Subspace::intersect(const Subspace& o) const {
  check_same(o);
  if (dim() == 0 || o.dim() == 0) return Subspace(field_, ambient_);
  Matrix stacked(field_, ambient_, dim() + o.dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) stacked(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < o.dim(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) stacked(i, dim() + j) = -o.basis_[j][i];
  const Subspace rel = kernel(stacked);
  std::vector<Vec> gens;
  for (const auto& st : rel.basis()) {
    Vec x = zero_vec(field_, ambient_);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!st[j].is_zero()) x = x + st[j] * basis_[j];
    }
    gens.push_back(std::move(x));
  }
  return span(field_, ambient_, gens);
}

inline std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << "]";
  return os.str();
}

}  // namespace globalize
