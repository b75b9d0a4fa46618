#pragma once

// Partial comodule algebras: verification, the geometric realization,
// the globalization equalizer Y, the enveloping coaction B and the comparison j: B -> Y.
//
// The coaction δ: A -> A⊗H is a (dim A · dim H) × dim A matrix; a⊗h sits at
// index a * dim H + h and a⊗h⊗h' at (a * dim H + h) * dim H + h'.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "globalize/algebra.hpp"
#include "globalize/bialgebra.hpp"
#include "globalize/error.hpp"
#include "globalize/exact.hpp"
#include "globalize/monoid.hpp"

namespace globalize {

struct AlgebraicPCA {
  FinDimAlgebra A;
  Bialgebra H;
  LinMap coaction;
  FinDimAlgebra AH;   // A⊗H
  FinDimAlgebra AHH;  // (A⊗H)⊗H

  Field field() const noexcept { return A.field(); }
  std::size_t dA() const noexcept { return A.dim(); }
  std::size_t dH() const noexcept { return H.dim(); }
  std::vector<std::size_t> dims2() const { return {dA(), dH()}; }
  std::vector<std::size_t> dims3() const { return {dA(), dH(), dH()}; }

  Vec delta(const Vec& a) const { return coaction * a; }
  /// (A⊗Δ)(v) for v in A⊗H.
  Vec coact(const Vec& v) const { return apply_on_leg(H.comult, v, dims2(), 1); }
  /// (A⊗ε)(v) for v in A⊗H.
  Vec counit_leg(const Vec& v) const { return apply_on_leg(H.counit, v, dims2(), 1); }
  LinMap counit_map() const { return kron(LinMap::identity(field(), dA()), H.counit); }
};

/// Counitality, multiplicativity and weak coassociativity (in this order).
inline AlgebraicPCA verify_algebraic_pca(FinDimAlgebra a, Bialgebra h, LinMap coaction) {
  if (!(a.field() == h.field())) throw Error("FieldMismatch", a.field().to_string() + " vs " + h.field().to_string());
  if (coaction.rows() != a.dim() * h.dim() || coaction.cols() != a.dim()) {
    throw Error("BadShape", "coaction must be (dim A · dim H) × dim A");
  }
  AlgebraicPCA p{std::move(a), std::move(h), std::move(coaction), {}, {}};
  p.AH = tensor_algebra(p.A, p.H.H);
  p.AHH = tensor_algebra(p.AH, p.H.H);
  std::vector<Vec> d;
  for (std::size_t i = 0; i < p.dA(); ++i) d.push_back(p.coaction.column(i));
  for (std::size_t i = 0; i < p.dA(); ++i)
    if (!(p.counit_leg(d[i]) == p.A.basis(i))) throw Error("NotCounital", p.A.labels()[i]);
  for (std::size_t i = 0; i < p.dA(); ++i)
    for (std::size_t j = 0; j < p.dA(); ++j) {
      if (!(p.delta(p.A.mul(p.A.basis(i), p.A.basis(j))) == p.AH.mul(d[i], d[j]))) {
        throw Error("NotMultiplicative", "(" + p.A.labels()[i] + "," + p.A.labels()[j] + ")");
      }
    }
  const Vec left_factor = kron(p.delta(p.A.unit()), p.H.H.unit());
  for (std::size_t i = 0; i < p.dA(); ++i) {
    const Vec lhs = apply_on_leg(p.coaction, d[i], p.dims2(), 0);
    const Vec rhs = p.AHH.mul(left_factor, p.coact(d[i]));
    if (!(lhs == rhs)) throw Error("NotWeaklyCoassociative", p.A.labels()[i]);
  }
  return p;
}

/// The same partial comodule algebra with A in the basis given by the columns of q.
inline AlgebraicPCA transport_pca(const AlgebraicPCA& p, const LinMap& q) {
  auto inv = inverse(q);
  if (!inv) throw Error("NotInvertible", "change of basis must be invertible");
  auto a = transport_algebra(p.A, q);
  LinMap coaction = kron(*inv, LinMap::identity(p.field(), p.dH())) * p.coaction * q;
  return verify_algebraic_pca(std::move(a), p.H, std::move(coaction));
}

struct GeometricPCA {
  Vec e_prime;             // 1⊗1 − δ(1)
  IdealPresentation ideal; // ⟨e′⟩ = ker π_A
  QuotientAlgebra AbulletH;
  LinMap piA;
  LinMap rhoA;             // π_A ∘ δ
};

inline GeometricPCA geometrize(const AlgebraicPCA& p) {
  GeometricPCA g;
  g.e_prime = p.AH.unit() - p.delta(p.A.unit());
  if (!(p.AH.mul(g.e_prime, g.e_prime) == g.e_prime)) detail::internal_error("NotIdempotent", to_string(g.e_prime));
  g.ideal = two_sided_ideal(p.AH, {g.e_prime});
  g.AbulletH = quotient_algebra(p.AH, g.ideal);
  g.piA = g.AbulletH.projection;
  g.rhoA = g.piA * p.coaction;
  if (!is_algebra_map(g.rhoA, p.A, g.AbulletH.algebra)) detail::internal_error("RhoNotAlgebraMap", "ρ_A = π_A∘δ");
  return g;
}

namespace detail {

/// B⊗H inside A⊗H⊗H for a subspace B of A⊗H.
inline Subspace tensor_with_H(const AlgebraicPCA& p, const Subspace& b) {
  std::vector<Vec> gens;
  for (const auto& v : b.basis())
    for (std::size_t h = 0; h < p.dH(); ++h) gens.push_back(kron(v, p.H.H.basis(h)));
  return Subspace::span(p.field(), p.AH.dim() * p.dH(), gens);
}

inline Subspace multiplicative_closure(const FinDimAlgebra& alg, std::vector<Vec> gens) {
  gens.push_back(alg.unit());
  Subspace cur = Subspace::span(alg.field(), alg.dim(), gens);
  while (true) {
    std::vector<Vec> next = cur.basis();
    for (const auto& u : cur.basis())
      for (const auto& v : cur.basis()) next.push_back(alg.mul(u, v));
    Subspace grown = Subspace::span(alg.field(), alg.dim(), next);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

/// All leg-3 slices of (A⊗Δ)(v) over the dual basis of H.
inline std::vector<Vec> coaction_slices(const AlgebraicPCA& p, const Vec& v) {
  const Vec w = p.coact(v);
  std::vector<Vec> out;
  for (std::size_t k = 0; k < p.dH(); ++k) out.push_back(slice(w, p.dims3(), 2, k));
  return out;
}

}  // namespace detail

/// Kernel of (ρ_A⊗H) − (π_A⊗H)(A⊗Δ): A⊗H -> (A•H)⊗H; asserted to be a
/// unital subalgebra stable under A⊗Δ.
inline Subspace compute_Y(const AlgebraicPCA& p, const GeometricPCA& g) {
  const std::size_t dq = g.piA.rows(), dAH = p.AH.dim();
  LinMap m(p.field(), dq * p.dH(), dAH);
  for (std::size_t a = 0; a < p.dA(); ++a)
    for (std::size_t h = 0; h < p.dH(); ++h) {
      const Vec eh = p.H.H.basis(h);
      const Vec lhs = kron(g.rhoA.column(a), eh);
      const Vec rhs = apply_on_leg(g.piA, kron(p.A.basis(a), p.H.delta(eh)), {dAH, p.dH()}, 0);
      const Vec col = lhs - rhs;
      for (std::size_t r = 0; r < col.size(); ++r) m(r, a * p.dH() + h) = col[r];
    }
  Subspace y = kernel(m);
  if (!y.contains(p.AH.unit())) detail::internal_error("NotSubalgebra", "1 ∉ Y");
  for (const auto& u : y.basis())
    for (const auto& v : y.basis())
      if (!y.contains(p.AH.mul(u, v))) detail::internal_error("NotSubalgebra", "Y·Y ⊄ Y");
  const Subspace yh = detail::tensor_with_H(p, y);
  for (const auto& u : y.basis())
    if (!yh.contains(p.coact(u))) detail::internal_error("NotCoactionStable", to_string(u));
  return y;
}

/// ker π_A equals the ideal generated by Y ∩ ker(A⊗ε), and (A⊗ε)|_Y is onto A.
inline Verdict check_pushout(const AlgebraicPCA& p, const GeometricPCA& g, const Subspace& y) {
  const LinMap eps = p.counit_map();
  const Subspace k = y.intersect(kernel(eps));
  const auto generated = two_sided_ideal(p.AH, k.basis());
  if (!(generated.closure == g.ideal.closure)) {
    return Verdict::fail("PushoutIdealMismatch", "generated ideal has dim " + std::to_string(generated.closure.dim()) +
                                                     ", ker π_A has dim " + std::to_string(g.ideal.closure.dim()));
  }
  if (rank(eps * y.basis_matrix()) != p.dA()) return Verdict::fail("CounitNotSurjective", "(A⊗ε)(Y) ≠ A");
  return Verdict::pass();
}

struct PCAGlobalization {
  GeometricPCA geo;
  Subspace Y;
  LinMap epsilonA;  // (A⊗ε)|_Y : Y -> A
  LinMap kappa;     // Y ↪ A⊗H
  LinMap vartheta;  // A -> Y with κ∘ϑ = δ
  Verdict pushout;
};

inline PCAGlobalization globalize_pca(const AlgebraicPCA& p) {
  PCAGlobalization r;
  r.geo = geometrize(p);
  r.Y = compute_Y(p, r.geo);
  r.pushout = check_pushout(p, r.geo, r.Y);
  if (!r.pushout) detail::internal_error("PushoutFailed", r.pushout.code + ": " + r.pushout.witness);

  const Vec& ep = r.geo.e_prime;
  const Vec w = apply_on_leg(p.coaction, ep, p.dims2(), 0) - p.coact(ep);
  if (!is_zero(apply_on_leg(r.geo.piA, w, {p.AH.dim(), p.dH()}, 0))) {
    detail::internal_error("EPrimeNotInKernel", "(δ⊗H − A⊗Δ)(e′) ∉ ker(π_A)⊗H");
  }
  if (!r.Y.contains(ep)) detail::internal_error("EPrimeNotInY", to_string(ep));

  r.kappa = r.Y.basis_matrix();
  r.epsilonA = p.counit_map() * r.kappa;
  r.vartheta = LinMap(p.field(), r.Y.dim(), p.dA());
  for (std::size_t i = 0; i < p.dA(); ++i) {
    const Vec d = p.delta(p.A.basis(i));
    if (!r.Y.contains(d)) detail::internal_error("DeltaNotInY", p.A.labels()[i]);
    const Vec c = r.Y.coordinates(d);
    for (std::size_t k = 0; k < c.size(); ++k) r.vartheta(k, i) = c[k];
  }
  if (!(r.kappa * r.vartheta == p.coaction)) detail::internal_error("KappaThetaNotDelta", "κ∘ϑ ≠ δ");
  if (!(r.epsilonA * r.vartheta == LinMap::identity(p.field(), p.dA()))) {
    detail::internal_error("CounitalityLost", "ε_A∘ϑ ≠ id");
  }
  return r;
}

struct EnvelopeResult {
  Subspace B;
  LinMap theta;  // A -> B in B's coordinates
  Vec e;         // θ(1) = δ(1) in A⊗H
  LinMap p;      // B -> A
  LinMap p_ambient;  // v -> (A⊗ε)(δ(1)·v) on all of A⊗H
  Subspace generated;  // comodule subalgebra generated by θ(A), built independently
};

namespace detail {

[[noreturn]] inline void envelope_failed(const std::string& axiom, const std::string& witness) {
  throw Error("EnvelopeAxiomFailed", axiom + ": " + witness, ErrorKind::Internal);
}

}  // namespace detail

/// B = unital multiplicative closure of the slices a_[0]⊗a_[1](1) f(a_[1](2)).
inline EnvelopeResult enveloping_coaction(const AlgebraicPCA& p) {
  EnvelopeResult r;
  std::vector<Vec> s;
  for (std::size_t i = 0; i < p.dA(); ++i)
    for (auto& v : detail::coaction_slices(p, p.delta(p.A.basis(i)))) s.push_back(std::move(v));
  r.B = detail::multiplicative_closure(p.AH, std::move(s));
  const Subspace bh = detail::tensor_with_H(p, r.B);
  for (std::size_t i = 0; i < r.B.dim(); ++i)
    if (!bh.contains(p.coact(r.B.basis()[i]))) detail::envelope_failed("coaction-stable", "basis " + std::to_string(i));

  r.theta = LinMap(p.field(), r.B.dim(), p.dA());
  std::vector<Vec> images;
  for (std::size_t i = 0; i < p.dA(); ++i) {
    images.push_back(p.delta(p.A.basis(i)));
    if (!r.B.contains(images.back())) detail::envelope_failed("theta", p.A.labels()[i]);
    const Vec c = r.B.coordinates(images.back());
    for (std::size_t k = 0; k < c.size(); ++k) r.theta(k, i) = c[k];
  }
  r.e = p.delta(p.A.unit());

  // (a) θ(A) is the right ideal eB, with unit e
  const Subspace theta_a = Subspace::span(p.field(), p.AH.dim(), images);
  std::vector<Vec> eb;
  for (const auto& b : r.B.basis()) eb.push_back(p.AH.mul(r.e, b));
  if (!(theta_a == Subspace::span(p.field(), p.AH.dim(), eb))) detail::envelope_failed("a", "θ(A) ≠ eB");
  for (const auto& x : images)
    if (!(p.AH.mul(r.e, x) == x)) detail::envelope_failed("a", "e is not a unit of θ(A)");

  // (b) alternate slicing and products starting from θ(A) alone
  Subspace cur = Subspace::span(p.field(), p.AH.dim(), images);
  while (true) {
    std::vector<Vec> gens = cur.basis();
    gens.push_back(p.AH.unit());
    for (const auto& v : cur.basis())
      for (auto& w : detail::coaction_slices(p, v)) gens.push_back(std::move(w));
    Subspace sliced = Subspace::span(p.field(), p.AH.dim(), gens);
    for (const auto& u : sliced.basis())
      for (const auto& v : sliced.basis()) gens.push_back(p.AH.mul(u, v));
    Subspace next = Subspace::span(p.field(), p.AH.dim(), gens);
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  r.generated = cur;
  if (!(r.generated == r.B)) detail::envelope_failed("b", "generated comodule algebra differs from B");

  // (c) θ(a_[0])⊗a_[1] = e θ(a)^[0]⊗θ(a)^[1]
  const Vec left_factor = kron(r.e, p.H.H.unit());
  for (std::size_t i = 0; i < p.dA(); ++i) {
    const Vec lhs = apply_on_leg(p.coaction, images[i], p.dims2(), 0);
    if (!(lhs == p.AHH.mul(left_factor, p.coact(images[i])))) detail::envelope_failed("c", p.A.labels()[i]);
  }

  r.p_ambient = p.counit_map() * p.AH.left_mult(r.e);
  r.p = r.p_ambient * r.B.basis_matrix();
  if (!(r.p * r.theta == LinMap::identity(p.field(), p.dA()))) detail::envelope_failed("p∘θ", "≠ id");
  for (std::size_t j = 0; j < r.B.dim(); ++j) {
    const Vec& b = r.B.basis()[j];
    if (!(p.delta(r.p_ambient * b) == p.AH.mul(r.e, b))) detail::envelope_failed("θ∘p", "basis " + std::to_string(j));
  }
  return r;
}

struct ComparisonReport {
  LinMap varkappa;  // (p⊗H)∘δ_B, columns in A⊗H
  LinMap j;         // B -> Y in Y's coordinates
  std::size_t dimB = 0;
  std::size_t dimY = 0;
  bool strict = false;
  std::vector<std::pair<std::string, Verdict>> checks;
};

inline ComparisonReport compare_envelope_globalization(const AlgebraicPCA& p, const PCAGlobalization& glob,
                                                       const EnvelopeResult& env) {
  ComparisonReport c;
  c.dimB = env.B.dim();
  c.dimY = glob.Y.dim();
  c.strict = c.dimB < c.dimY;
  const std::size_t dAH = p.AH.dim();
  auto varkappa_of = [&](const Vec& v) { return apply_on_leg(env.p_ambient, p.coact(v), {dAH, p.dH()}, 0); };
  LinMap amb(p.field(), dAH, dAH);
  for (std::size_t k = 0; k < dAH; ++k) {
    const Vec col = varkappa_of(p.AH.basis(k));
    for (std::size_t r = 0; r < dAH; ++r) amb(r, k) = col[r];
  }
  std::vector<Vec> cols;
  for (const auto& b : env.B.basis()) cols.push_back(amb * b);
  c.varkappa = LinMap::from_columns(p.field(), dAH, cols);

  auto fail = [](const char* code, std::string w) { throw Error("ComparisonFailed", std::string(code) + ": " + w, ErrorKind::Internal); };
  c.j = LinMap(p.field(), glob.Y.dim(), env.B.dim());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (!glob.Y.contains(cols[i])) fail("image", "ϰ(b" + std::to_string(i) + ") ∉ Y");
    const Vec y = glob.Y.coordinates(cols[i]);
    for (std::size_t k = 0; k < y.size(); ++k) c.j(k, i) = y[k];
  }
  c.checks.emplace_back("j_injective", rank(c.j) == env.B.dim() ? Verdict::pass() : Verdict::fail("NotInjective", "rank " + std::to_string(rank(c.j))));

  Verdict alg = Verdict::pass();
  if (!(amb * p.AH.unit() == p.AH.unit())) alg = Verdict::fail("NotUnital", "ϰ(1) ≠ 1");
  for (std::size_t a = 0; a < cols.size() && alg; ++a)
    for (std::size_t b = 0; b < cols.size() && alg; ++b)
      if (!(amb * p.AH.mul(env.B.basis()[a], env.B.basis()[b]) == p.AH.mul(cols[a], cols[b]))) {
        alg = Verdict::fail("NotMultiplicative", "(b" + std::to_string(a) + ",b" + std::to_string(b) + ")");
      }
  for (std::size_t a = 0; a < cols.size() && alg; ++a)
    if (!(p.coact(cols[a]) == apply_on_leg(amb, p.coact(env.B.basis()[a]), {dAH, p.dH()}, 0))) {
      alg = Verdict::fail("NotColinear", "b" + std::to_string(a));
    }
  c.checks.emplace_back("j_comodule_algebra_map", alg);

  c.checks.emplace_back("epsilonA_j_eq_p", glob.epsilonA * c.j == env.p ? Verdict::pass() : Verdict::fail("IdentityI", "ε_A∘j ≠ p"));
  c.checks.emplace_back("kappa_j_eq_varkappa",
                        glob.kappa * c.j == c.varkappa ? Verdict::pass() : Verdict::fail("IdentityII", "κ∘j ≠ ϰ"));
  c.checks.emplace_back("varkappa_is_inclusion", c.varkappa == env.B.basis_matrix()
                                                     ? Verdict::pass()
                                                     : Verdict::fail("NotInclusion", "ϰ differs from B ⊆ A⊗H"));
  for (const auto& [name, v] : c.checks)
    if (!v) fail(name.c_str(), v.witness);
  return c;
}

// ---------------------------------------------------------------- fixtures

/// A = t·kG with t = |N|⁻¹ Σ n, basis t·g_i over right-coset representatives.
struct AB1Data {
  AlgebraicPCA pca;
  QuotientGroup cosets;
  Vec t;                      // in kG
  LinMap embedding;           // A -> kG, e_i -> t g_i
};

inline AB1Data ab1_fixture(const FiniteMonoid& g, const SubgroupSpec& n, Field f) {
  const std::size_t order = n.members.size();
  if (f.characteristic() != 0 && order % f.characteristic() == 0) {
    throw Error("CharDividesN", std::to_string(f.characteristic()) + " divides " + std::to_string(order));
  }
  AB1Data d;
  d.cosets = quotient_group(g, n);
  auto bial = group_bialgebra(g, f);
  const auto& kg = bial.H;
  const Scalar inv_order = Scalar(f, static_cast<long>(order)).inverse();
  d.t = kg.zero();
  for (auto m : n.members) d.t[m] += inv_order;
  if (!(kg.mul(d.t, d.t) == d.t)) detail::internal_error("NotIdempotent", "t");
  for (std::size_t x = 0; x < g.size(); ++x)
    if (!(kg.mul(d.t, kg.basis(x)) == kg.mul(kg.basis(x), d.t))) detail::internal_error("NotCentral", g.label(x));
  for (auto m : n.members)
    if (!(kg.mul(kg.basis(m), d.t) == d.t) || !(kg.mul(d.t, kg.basis(m)) == d.t)) {
      detail::internal_error("NotAnIntegral", g.label(m));
    }
  const auto& reps = d.cosets.representatives;
  const std::size_t r = reps.size();
  std::vector<std::string> labels;
  for (auto rep : reps) labels.push_back("t" + g.label(rep));
  std::vector<SparseVec> table(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      table[i * r + j] = {{d.cosets.projection[g.mul(reps[i], reps[j])], Scalar::one(f)}};
  auto a = validate_algebra(f, std::move(labels), std::move(table), unit_vec(f, r, d.cosets.projection[g.identity()]));
  d.embedding = LinMap(f, g.size(), r);
  for (std::size_t i = 0; i < r; ++i) {
    const Vec tg = kg.mul(d.t, kg.basis(reps[i]));
    for (std::size_t x = 0; x < g.size(); ++x) d.embedding(x, i) = tg[x];
  }
  // multiplicative, though it sends 1_A to t rather than to 1
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!(d.embedding * a.mul(a.basis(i), a.basis(j)) == kg.mul(d.embedding.column(i), d.embedding.column(j)))) {
        detail::internal_error("EmbeddingNotMultiplicative", a.labels()[i] + "," + a.labels()[j]);
      }
  LinMap coaction(f, r * g.size(), r);
  for (std::size_t i = 0; i < r; ++i) {
    const Vec col = kron(a.basis(i), d.embedding.column(i));
    for (std::size_t k = 0; k < col.size(); ++k) coaction(k, i) = col[k];
  }
  d.pca = verify_algebraic_pca(std::move(a), std::move(bial), std::move(coaction));
  return d;
}

/// f = ½(1 + g + α gx) in H4.
inline Vec h4_idempotent(Field f, const Scalar& alpha) {
  const Scalar half = Scalar(f, 2).inverse();
  return {half, half, Scalar::zero(f), half * alpha};
}

/// A = k with δ(λ) = λ f.
inline AlgebraicPCA ab2_fixture(const Scalar& alpha) {
  const Field f = alpha.field();
  auto h = sweedler_h4(f);
  return verify_algebraic_pca(ground_algebra(f), std::move(h), LinMap::from_columns(f, 4, {h4_idempotent(f, alpha)}));
}

/// H coacting on itself by Δ.
inline AlgebraicPCA global_self_fixture(const Bialgebra& h) {
  return verify_algebraic_pca(h.H, h, h.comult);
}

/// k with the trivial coaction 1 -> 1⊗1.
inline AlgebraicPCA global_trivial_fixture(const Bialgebra& h) {
  return verify_algebraic_pca(ground_algebra(h.field()), h, LinMap::from_columns(h.field(), h.dim(), {h.H.unit()}));
}

}  // namespace globalize
