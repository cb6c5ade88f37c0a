#pragma once

/* Shared handmade fixtures.  Several of these duplicate, by direct table
 * entry, algebras that the library can also construct; the tests use them as
 * independent cross-checks, so they must stay hand-written. */

#include <string>
#include <vector>

#include "suspla/bialgebra.hpp"

namespace fixtures {

using namespace suspla;

inline Scalar binom(const Field& k, int n, int r) {
  long v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return Scalar::of_int(k, v);
}

/* k[x] truncated above x^cap: basis 1, x, ..., x^cap, binomial coproduct,
 * overflow past the cap.  Ungraded. */
inline PresentedBialgebra truncated_poly(int cap, Field k) {
  std::vector<std::string> names{"1"};
  for (int i = 1; i <= cap; ++i) names.push_back("x^" + std::to_string(i));
  PresentedBialgebra A(k, names);
  const Scalar one = Scalar::one(k);
  A.set_unit(SparseVec::unit(0, one));
  A.set_counit(0, one);
  for (int i = 0; i <= cap; ++i) {
    std::vector<Tensor2::Term> dt;
    for (int r = 0; r <= i; ++r) dt.push_back({{r, i - r}, binom(k, i, r)});
    A.set_comult(i, Tensor2::of_terms(std::move(dt)));
    for (int j = 0; j <= cap; ++j) {
      if (i + j <= cap)
        A.set_mult(i, j, SparseVec::unit(i + j, one));
      else
        A.set_mult_overflow(i, j);
    }
  }
  return A;
}

/* Hand-entered truncation of k[Q,x]/(Qx) with x of degree Q: blocks
 * 1 | Q,x | Q^2,x^2 | Q^3,x^3.  x is Q-primitive and annihilated by Q. */
inline PresentedBialgebra handmade_w_torsion(Field k) {
  Monoid G = Monoid::free_rank1("Q");
  std::vector<PresentedBialgebra::Element> basis = {
      {"1", 0}, {"Q", 1}, {"x", 1}, {"Q^2", 2}, {"x^2", 2}, {"Q^3", 3}, {"x^3", 3}};
  PresentedBialgebra A(k, G, basis);
  const Scalar one = Scalar::one(k);
  A.set_unit(SparseVec::unit(0, one));

  auto idx = [&](const std::string& n) { return A.index_of(n); };
  auto qpow = [&](int e) { return e == 0 ? std::string("1") : (e == 1 ? "Q" : "Q^" + std::to_string(e)); };
  auto xpow = [&](int e) { return e == 1 ? std::string("x") : "x^" + std::to_string(e); };

  for (int e = 0; e <= 3; ++e) {
    int g = idx(qpow(e));
    A.set_counit(g, one);
    A.set_comult(g, Tensor2::pure(g, g, one));
  }
  for (int e = 1; e <= 3; ++e) {
    int xi = idx(xpow(e));
    int ge = idx(qpow(e));
    A.set_comult(xi, Tensor2::pure(xi, ge, one) + Tensor2::pure(ge, xi, one));
  }

  /* Q^a Q^b, Q^a x^b (=0 for a>0), x^a x^b; overflow past degree Q^3. */
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      if (a + b > 3) {
        if (a <= 3 && b <= 3) {
          A.set_mult_overflow(idx(qpow(a)), idx(qpow(b)));
          if (b >= 1) A.set_mult_overflow(idx(qpow(a)), idx(xpow(b)));
          if (a >= 1) A.set_mult_overflow(idx(xpow(a)), idx(qpow(b)));
          if (a >= 1 && b >= 1) A.set_mult_overflow(idx(xpow(a)), idx(xpow(b)));
        }
        continue;
      }
      A.set_mult(idx(qpow(a)), idx(qpow(b)), SparseVec::unit(idx(qpow(a + b)), one));
      if (b >= 1)
        A.set_mult(idx(qpow(a)), idx(xpow(b)),
                   a == 0 ? SparseVec::unit(idx(xpow(b)), one) : SparseVec());
      if (a >= 1)
        A.set_mult(idx(xpow(a)), idx(qpow(b)),
                   b == 0 ? SparseVec::unit(idx(xpow(a)), one) : SparseVec());
      if (a >= 1 && b >= 1) A.set_mult(idx(xpow(a)), idx(xpow(b)),
                                       SparseVec::unit(idx(xpow(a + b)), one));
    }
  return A;
}

inline RigidStructure handmade_w_torsion_rigid(const PresentedBialgebra& A) {
  RigidStructure r{Monoid::free_rank1("Q"), {}};
  const Scalar one = Scalar::one(A.field());
  r.eta[0] = SparseVec::unit(A.index_of("1"), one);
  r.eta[1] = SparseVec::unit(A.index_of("Q"), one);
  r.eta[2] = SparseVec::unit(A.index_of("Q^2"), one);
  r.eta[3] = SparseVec::unit(A.index_of("Q^3"), one);
  return r;
}

/* The further quotient in which products of the torsion primitive vanish:
 * blocks 1 | Q,x | Q^2 | Q^3. */
inline PresentedBialgebra handmade_z_torsion(Field k) {
  Monoid G = Monoid::free_rank1("Q");
  std::vector<PresentedBialgebra::Element> basis = {
      {"1", 0}, {"Q", 1}, {"x", 1}, {"Q^2", 2}, {"Q^3", 3}};
  PresentedBialgebra A(k, G, basis);
  const Scalar one = Scalar::one(k);
  A.set_unit(SparseVec::unit(0, one));

  auto idx = [&](const std::string& n) { return A.index_of(n); };
  const std::vector<std::string> q{"1", "Q", "Q^2", "Q^3"};
  for (int e = 0; e <= 3; ++e) {
    int g = idx(q[e]);
    A.set_counit(g, one);
    A.set_comult(g, Tensor2::pure(g, g, one));
  }
  int x = idx("x"), Q1 = idx("Q");
  A.set_comult(x, Tensor2::pure(x, Q1, one) + Tensor2::pure(Q1, x, one));

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      if (a + b <= 3)
        A.set_mult(idx(q[a]), idx(q[b]), SparseVec::unit(idx(q[a + b]), one));
      else
        A.set_mult_overflow(idx(q[a]), idx(q[b]));
    }
  for (int a = 0; a <= 3; ++a) {
    /* x has degree Q: products with Q^a stay in window up to Q^2 * x. */
    if (a + 1 <= 3) {
      A.set_mult(idx(q[a]), x, a == 0 ? SparseVec::unit(x, one) : SparseVec());
      A.set_mult(x, idx(q[a]), a == 0 ? SparseVec::unit(x, one) : SparseVec());
    } else {
      A.set_mult_overflow(idx(q[a]), x);
      A.set_mult_overflow(x, idx(q[a]));
    }
  }
  A.set_mult(x, x, SparseVec());
  return A;
}

inline RigidStructure handmade_z_torsion_rigid(const PresentedBialgebra& A) {
  RigidStructure r{Monoid::free_rank1("Q"), {}};
  const Scalar one = Scalar::one(A.field());
  r.eta[0] = SparseVec::unit(A.index_of("1"), one);
  r.eta[1] = SparseVec::unit(A.index_of("Q"), one);
  r.eta[2] = SparseVec::unit(A.index_of("Q^2"), one);
  r.eta[3] = SparseVec::unit(A.index_of("Q^3"), one);
  return r;
}

/* Six-dimensional algebra on 1, a, a^2, g, ga, ga^2 with g idempotent
 * grouplike, a primitive, ag = 0 but ga != 0.  The noncentral grouplike g
 * breaks primitive-grouplike compatibility. */
inline PresentedBialgebra noncentral_grouplike(Field k) {
  Monoid G = Monoid::finite_table({"1", "t"}, 0, {{0, 1}, {1, 1}});
  std::vector<PresentedBialgebra::Element> basis = {
      {"1", 0}, {"a", 0}, {"a^2", 0}, {"g", 1}, {"ga", 1}, {"ga^2", 1}};
  PresentedBialgebra A(k, G, basis);
  const Scalar one = Scalar::one(k);
  const Scalar two = Scalar::of_int(k, 2);
  enum { E = 0, a = 1, a2 = 2, g = 3, ga = 4, ga2 = 5 };

  A.set_unit(SparseVec::unit(E, one));
  A.set_counit(E, one);
  A.set_counit(g, one);

  A.set_comult(E, Tensor2::pure(E, E, one));
  A.set_comult(g, Tensor2::pure(g, g, one));
  A.set_comult(a, Tensor2::pure(a, E, one) + Tensor2::pure(E, a, one));
  A.set_comult(a2, Tensor2::pure(a2, E, one) + Tensor2::pure(a, a, two) +
                       Tensor2::pure(E, a2, one));
  A.set_comult(ga, Tensor2::pure(ga, g, one) + Tensor2::pure(g, ga, one));
  A.set_comult(ga2, Tensor2::pure(ga2, g, one) + Tensor2::pure(ga, ga, two) +
                        Tensor2::pure(g, ga2, one));

  auto unit_at = [&](int i) { return SparseVec::unit(i, one); };
  for (int i = 0; i < 6; ++i) {
    A.set_mult(E, i, unit_at(i));
    A.set_mult(i, E, unit_at(i));
  }
  A.set_mult(a, a, unit_at(a2));
  A.set_mult(g, g, unit_at(g));
  A.set_mult(g, a, unit_at(ga));
  A.set_mult(g, a2, unit_at(ga2));
  A.set_mult(g, ga, unit_at(ga));
  A.set_mult(g, ga2, unit_at(ga2));
  A.set_mult(ga, a, unit_at(ga2));
  /* Products of total a-weight 3 or 4 leave the truncation. */
  for (int x : {a, ga})
    for (int y : {a2, ga2}) {
      A.set_mult_overflow(x, y);
      A.set_mult_overflow(y, x);
    }
  for (int x : {a2, ga2})
    for (int y : {a2, ga2}) A.set_mult_overflow(x, y);
  /* everything else collapses to zero: a.g = 0, ga.g = 0, ga.ga = 0, ... */
  return A;
}

/* One letter x of degree Q with trivial action: Q kills x in the envelope. */
inline SuspensiveLie torsion_line_lie(Field k) {
  Monoid G = Monoid::free_rank1("Q");
  return SuspensiveLie(k, G, {{"x", 1}});
}

/* One letter per degree s^0..s^3 with the shift action.  The envelope is a
 * truncated polynomial algebra on the grouplike s and the base letter x0. */
inline SuspensiveLie shift_tower_lie(Field k) {
  Monoid G = Monoid::free_rank1("s");
  SuspensiveLie L(k, G, {{"x0", 0}, {"x1", 1}, {"x2", 2}, {"x3", 3}});
  const Scalar one = Scalar::one(k);
  for (int i = 0; i < 3; ++i) L.set_action(1, i, SparseVec::unit(i + 1, one));
  return L;
}

/* a, b in degree s with [a, b] = c in degree s^2, no action. */
inline SuspensiveLie heisenberg_lie(Field k) {
  Monoid G = Monoid::free_rank1("s");
  SuspensiveLie L(k, G, {{"a", 1}, {"b", 1}, {"c", 2}});
  L.set_bracket(0, 1, SparseVec::unit(2, Scalar::one(k)));
  return L;
}

/* Over the order-two group: u and v in the two degrees, swapped by t. */
inline SuspensiveLie c2_swap_lie(Field k) {
  Monoid G = Monoid::finite_table({"1", "t"}, 0, {{0, 1}, {1, 0}});
  SuspensiveLie L(k, G, {{"u", 0}, {"v", 1}});
  const Scalar one = Scalar::one(k);
  L.set_action(1, 0, SparseVec::unit(1, one));
  L.set_action(1, 1, SparseVec::unit(0, one));
  return L;
}

/* Commutative pointed monoid on 1, a, b, z in which every product of two
 * non-units is the absorbing z; a and b do not divide one another. */
inline Monoid diamond_monoid() {
  return Monoid::finite_table({"1", "a", "b", "z"}, 0,
                              {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}});
}

inline RigidStructure noncentral_grouplike_rigid(const PresentedBialgebra& A) {
  RigidStructure r{Monoid::finite_table({"1", "t"}, 0, {{0, 1}, {1, 1}}), {}};
  const Scalar one = Scalar::one(A.field());
  r.eta[0] = SparseVec::unit(A.index_of("1"), one);
  r.eta[1] = SparseVec::unit(A.index_of("g"), one);
  return r;
}

}  // namespace fixtures
