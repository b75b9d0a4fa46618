#pragma once

// Finite-dimensional unital associative algebras by structure constants.
//
// Products of basis vectors are stored sparsely: entry (i, j) lists the
// nonzero coefficients of e_i·e_j. Linear maps are plain matrices with
// rows indexing the target basis and columns the source basis.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "globalize/error.hpp"
#include "globalize/exact.hpp"
#include "globalize/monoid.hpp"

namespace globalize {

using LinMap = Matrix;

struct Term {
  std::size_t index;
  Scalar coeff;
};

using SparseVec = std::vector<Term>;

inline SparseVec sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vec& unit() const noexcept { return unit_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec basis(std::size_t i) const { return unit_vec(field_, dim(), i); }
  Vec zero() const { return zero_vec(field_, dim()); }

  Vec mul(const Vec& a, const Vec& b) const {
    if (a.size() != dim() || b.size() != dim()) detail::internal_error("DimensionMismatch", "algebra product");
    Vec out = zero();
    const auto sa = sparse(a), sb = sparse(b);
    for (const auto& [i, x] : sa)
      for (const auto& [j, y] : sb) {
        const auto& p = product(i, j);
        if (p.empty()) continue;
        const Scalar xy = x * y;
        for (const auto& [k, c] : p) out[k] += xy * c;
      }
    return out;
  }

  /// Matrix of v -> a·v.
  LinMap left_mult(const Vec& a) const {
    LinMap m(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const Vec col = mul(a, basis(j));
      for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
    }
    return m;
  }

  /// Builds without checking the axioms; used by constructions that preserve them.
  static FinDimAlgebra trusted(Field f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit) {
    FinDimAlgebra a;
    a.field_ = f;
    a.labels_ = std::move(labels);
    a.table_ = std::move(table);
    a.unit_ = std::move(unit);
    return a;
  }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vec unit_;
};

/// Checks the unit law, then associativity on all basis triples.
inline FinDimAlgebra validate_algebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table,
                                      Vec unit) {
  const std::size_t n = labels.size();
  if (table.size() != n * n) throw Error("BadIndex", "structure constants need dim² entries");
  if (unit.size() != n) throw Error("BadIndex", "unit has the wrong length");
  for (const auto& entry : table)
    for (const auto& t : entry) {
      if (t.index >= n) throw Error("BadIndex", "structure constant index " + std::to_string(t.index));
      if (!(t.coeff.field() == f)) throw Error("FieldMismatch", "structure constant outside " + f.to_string());
    }
  for (auto& entry : table) {
    SparseVec cleaned;
    for (auto& t : entry)
      if (!t.coeff.is_zero()) cleaned.push_back(t);
    entry = std::move(cleaned);
  }
  auto a = FinDimAlgebra::trusted(f, std::move(labels), std::move(table), std::move(unit));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = a.basis(i);
    if (!(a.mul(a.unit(), e) == e) || !(a.mul(e, a.unit()) == e)) throw Error("BadUnit", a.labels()[i]);
  }
  std::vector<SparseVec> pairs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs[i * n + j] = a.product(i, j);
  Vec lhs = a.zero(), rhs = a.zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (auto& s : lhs) s = Scalar::zero(f);
        for (auto& s : rhs) s = Scalar::zero(f);
        for (const auto& [t, c] : pairs[i * n + j])
          for (const auto& [u, d] : a.product(t, k)) lhs[u] += c * d;
        for (const auto& [t, c] : pairs[j * n + k])
          for (const auto& [u, d] : a.product(i, t)) rhs[u] += c * d;
        if (!(lhs == rhs)) {
          throw Error("NotAssociative", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
  return a;
}

/// The base field as a one-dimensional algebra.
inline FinDimAlgebra ground_algebra(Field f) {
  return FinDimAlgebra::trusted(f, {"1"}, {{{0, Scalar::one(f)}}}, {Scalar::one(f)});
}

/// kM with e_g·e_h = e_{gh}.
inline FinDimAlgebra group_algebra(const FiniteMonoid& m, Field f) {
  const std::size_t n = m.size();
  std::vector<SparseVec> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = {{m.mul(a, b), Scalar::one(f)}};
  return FinDimAlgebra::trusted(f, m.labels(), std::move(table), unit_vec(f, n, m.identity()));
}

/// n×n matrices with basis E_ij at index i*n + j.
inline FinDimAlgebra matrix_algebra(std::size_t n, Field f) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  const std::size_t d = n * n;
  std::vector<SparseVec> table(d * d);
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = Scalar::one(f);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) table[(i * n + j) * d + (j * n + l)] = {{i * n + l, Scalar::one(f)}};
  }
  return FinDimAlgebra::trusted(f, std::move(labels), std::move(table), std::move(unit));
}

/// A⊗B with componentwise product; a⊗b sits at index a * dim(B) + b.
inline FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  if (!(a.field() == b.field())) throw Error("FieldMismatch", a.field().to_string() + " vs " + b.field().to_string());
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k) {
      const auto& pa = a.product(i, k);
      if (pa.empty()) continue;
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
          const auto& pb = b.product(j, l);
          auto& slot = table[(i * nb + j) * n + (k * nb + l)];
          for (const auto& [u, x] : pa)
            for (const auto& [v, y] : pb) slot.push_back({u * nb + v, x * y});
        }
    }
  return FinDimAlgebra::trusted(a.field(), std::move(labels), std::move(table), kron(a.unit(), b.unit()));
}

struct IdealPresentation {
  std::vector<Vec> generators;
  Subspace closure;
};

/// Smallest subspace containing the generators and stable under e_i·(−) and (−)·e_i.
inline IdealPresentation two_sided_ideal(const FinDimAlgebra& a, std::vector<Vec> generators) {
  Subspace current = Subspace::span(a.field(), a.dim(), generators);
  while (true) {
    std::vector<Vec> gens = current.basis();
    for (const auto& v : current.basis())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        gens.push_back(a.mul(a.basis(i), v));
        gens.push_back(a.mul(v, a.basis(i)));
      }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
  }
  return {std::move(generators), std::move(current)};
}

struct QuotientAlgebra {
  FinDimAlgebra algebra;
  LinMap projection;               // dim(A/I) × dim(A)
  std::vector<std::size_t> cosets; // ambient coordinates kept as the quotient basis
  bool is_zero = false;
};

/// A/I on the non-pivot coordinates of I's canonical basis.
inline QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const IdealPresentation& ideal) {
  const auto& sub = ideal.closure;
  std::vector<bool> pivot(a.dim(), false);
  for (auto p : sub.pivots()) pivot[p] = true;
  QuotientAlgebra q;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!pivot[i]) q.cosets.push_back(i);
  const std::size_t r = q.cosets.size();
  q.is_zero = (r == 0);
  q.projection = LinMap(a.field(), r, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vec red = sub.reduce(a.basis(j));
    for (std::size_t k = 0; k < r; ++k) q.projection(k, j) = red[q.cosets[k]];
  }
  std::vector<std::string> labels;
  for (auto c : q.cosets) labels.push_back("[" + a.labels()[c] + "]");
  std::vector<SparseVec> table(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      table[i * r + j] = sparse(q.projection * a.mul(a.basis(q.cosets[i]), a.basis(q.cosets[j])));
  Vec unit = q.projection * a.unit();
  q.algebra = validate_algebra(a.field(), std::move(labels), std::move(table), std::move(unit));
  return q;
}

/// f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j).
inline bool is_algebra_map(const LinMap& f, const FinDimAlgebra& a, const FinDimAlgebra& b) {
  if (f.cols() != a.dim() || f.rows() != b.dim()) return false;
  if (!(f * a.unit() == b.unit())) return false;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(f.column(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(f * a.mul(a.basis(i), a.basis(j)) == b.mul(images[i], images[j]))) return false;
  return true;
}

/// The same algebra in the basis given by the columns of the invertible p.
inline FinDimAlgebra transport_algebra(const FinDimAlgebra& a, const LinMap& p) {
  auto inv = inverse(p);
  if (!inv || p.rows() != a.dim()) throw Error("NotInvertible", "change of basis must be invertible");
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = sparse(*inv * a.mul(cols[i], cols[j]));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  return FinDimAlgebra::trusted(a.field(), std::move(labels), std::move(table), *inv * a.unit());
}

}  // namespace globalize
