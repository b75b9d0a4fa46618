#pragma once

// Finite-dimensional bialgebras and slicing of tensor legs by dual functionals.
//
// The comultiplication is a dim² × dim matrix whose column i is Δ(e_i); the
// counit is a 1 × dim matrix.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "globalize/algebra.hpp"
#include "globalize/error.hpp"
#include "globalize/exact.hpp"
#include "globalize/monoid.hpp"

namespace globalize {

struct Bialgebra {
  FinDimAlgebra H;
  LinMap comult;
  LinMap counit;

  std::size_t dim() const noexcept { return H.dim(); }
  Field field() const noexcept { return H.field(); }
  Vec delta(const Vec& h) const { return comult * h; }
  Scalar epsilon(const Vec& h) const { return (counit * h)[0]; }
};

/// Coassociativity, then counit laws, then multiplicativity of Δ and ε.
inline Bialgebra validate_bialgebra(FinDimAlgebra h, LinMap comult, LinMap counit) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  if (comult.rows() != n * n || comult.cols() != n) throw Error("BadShape", "comult must be dim² × dim");
  if (counit.rows() != 1 || counit.cols() != n) throw Error("BadShape", "counit must be 1 × dim");
  const LinMap id = LinMap::identity(f, n);
  const LinMap left = kron(comult, id) * comult;
  const LinMap right = kron(id, comult) * comult;
  for (std::size_t i = 0; i < n; ++i)
    if (!(left.column(i) == right.column(i))) throw Error("NotCoassociative", h.labels()[i]);
  const LinMap eps_left = kron(counit, id) * comult;
  const LinMap eps_right = kron(id, counit) * comult;
  for (std::size_t i = 0; i < n; ++i)
    if (!(eps_left.column(i) == id.column(i)) || !(eps_right.column(i) == id.column(i))) {
      throw Error("BadCounit", h.labels()[i]);
    }
  const FinDimAlgebra hh = tensor_algebra(h, h);
  Bialgebra b{std::move(h), std::move(comult), std::move(counit)};
  if (!(b.delta(b.H.unit()) == hh.unit())) throw Error("DeltaNotMultiplicative", "Δ(1) ≠ 1⊗1");
  if (!b.epsilon(b.H.unit()).is_one()) throw Error("CounitNotMultiplicative", "ε(1) ≠ 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ei = b.H.basis(i), ej = b.H.basis(j), eij = b.H.mul(ei, ej);
      if (!(b.delta(eij) == hh.mul(b.delta(ei), b.delta(ej)))) {
        throw Error("DeltaNotMultiplicative", "(" + b.H.labels()[i] + "," + b.H.labels()[j] + ")");
      }
      if (!(b.epsilon(eij) == b.epsilon(ei) * b.epsilon(ej))) {
        throw Error("CounitNotMultiplicative", "(" + b.H.labels()[i] + "," + b.H.labels()[j] + ")");
      }
    }
  return b;
}

/// kG with every group element group-like.
inline Bialgebra group_bialgebra(const FiniteMonoid& g, Field f) {
  const std::size_t n = g.size();
  LinMap comult(f, n * n, n), counit(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    comult(i * n + i, i) = Scalar::one(f);
    counit(0, i) = Scalar::one(f);
  }
  return validate_bialgebra(group_algebra(g, f), std::move(comult), std::move(counit));
}

/// Sweedler's four-dimensional bialgebra on the basis (1, g, x, gx).
/// The sign in Δ(x) = x⊗1 + g⊗x is the only one making Δ coassociative.
inline Bialgebra sweedler_h4(Field f) {
  if (f.characteristic() == 2) throw Error("CharTwo", "H4 needs characteristic other than 2");
  // basis index 2b + a stands for g^a x^b; (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}
  auto index = [](std::size_t a, std::size_t b) { return 2 * b + a; };
  std::vector<SparseVec> table(16);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          table[index(a, b) * 4 + index(c, d)] = {{index((a + c) % 2, b + d), Scalar(f, (b * c) % 2 ? -1 : 1)}};
        }
  auto h = validate_algebra(f, {"1", "g", "x", "gx"}, std::move(table), unit_vec(f, 4, 0));
  const Scalar one = Scalar::one(f);
  LinMap comult(f, 16, 4), counit(f, 1, 4);
  comult(0 * 4 + 0, 0) = one;      // Δ(1) = 1⊗1
  comult(1 * 4 + 1, 1) = one;      // Δ(g) = g⊗g
  comult(2 * 4 + 0, 2) = one;      // Δ(x) = x⊗1 + g⊗x
  comult(1 * 4 + 2, 2) = one;
  comult(3 * 4 + 1, 3) = one;      // Δ(gx) = gx⊗g + 1⊗gx
  comult(0 * 4 + 3, 3) = one;
  counit(0, 0) = one;
  counit(0, 1) = one;
  return validate_bialgebra(std::move(h), std::move(comult), std::move(counit));
}

/// Contracts `leg` of v ∈ V_0⊗...⊗V_r (dimensions `dims`) against the functional phi.
inline Vec contract_leg(const Vec& v, const std::vector<std::size_t>& dims, std::size_t leg, const Vec& phi) {
  if (leg >= dims.size()) throw Error("BadShape", "leg " + std::to_string(leg) + " out of range");
  std::size_t total = 1, inner = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    total *= dims[i];
    if (i > leg) inner *= dims[i];
  }
  if (v.size() != total || phi.size() != dims[leg]) throw Error("BadShape", "slice operands do not match");
  const std::size_t d = dims[leg];
  const Field f = phi.empty() ? Field{} : phi.front().field();
  Vec out = zero_vec(f, total / d);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (v[idx].is_zero()) continue;
    const std::size_t outer = idx / (d * inner), k = (idx / inner) % d, rest = idx % inner;
    if (!phi[k].is_zero()) out[outer * inner + rest] += v[idx] * phi[k];
  }
  return out;
}

/// Applies the dual-basis functional e_k* to the chosen leg.
inline Vec slice(const Vec& v, const std::vector<std::size_t>& dims, std::size_t leg, std::size_t k) {
  if (leg >= dims.size() || k >= dims[leg]) throw Error("BadShape", "functional index out of range");
  const Field f = v.empty() ? Field{} : v.front().field();
  return contract_leg(v, dims, leg, unit_vec(f, dims[leg], k));
}

/// Applies a linear map to one leg of a tensor, leaving the others untouched.
inline Vec apply_on_leg(const LinMap& m, const Vec& v, const std::vector<std::size_t>& dims, std::size_t leg) {
  if (leg >= dims.size() || m.cols() != dims[leg]) throw Error("BadShape", "map does not fit the leg");
  std::size_t total = 1, inner = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    total *= dims[i];
    if (i > leg) inner *= dims[i];
  }
  if (v.size() != total) throw Error("BadShape", "tensor has the wrong length");
  const std::size_t d = dims[leg], r = m.rows();
  const Field f = m.field();
  Vec out = zero_vec(f, total / d * r);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (v[idx].is_zero()) continue;
    const std::size_t outer = idx / (d * inner), k = (idx / inner) % d, rest = idx % inner;
    for (std::size_t t = 0; t < r; ++t)
      if (!m(t, k).is_zero()) out[(outer * r + t) * inner + rest] += v[idx] * m(t, k);
  }
  return out;
}

}  // namespace globalize
