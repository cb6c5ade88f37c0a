#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "suspla/bialgebra.hpp"
#include "suspla/suspensive.hpp"

namespace suspla {

/* One spanning monomial of a truncated envelope: a grouplike part and a word
 * in the basis of the source Lie algebra.  Ambient monomials carry words in
 * any order; basis cosets are represented by weakly increasing ones with the
 * grouplike part absorbed as far as the relations allow. */
struct EnvelopeMonomial {
  int grouplike = 0;
  std::vector<int> word;

  bool operator<(const EnvelopeMonomial& o) const {
    return std::tie(grouplike, word) < std::tie(o.grouplike, o.word);
  }
  bool operator==(const EnvelopeMonomial& o) const {
    return grouplike == o.grouplike && word == o.word;
  }
};

/* Degreewise truncation of an enveloping bialgebra of a suspensive Lie
 * algebra: the quotient of the span of grouplike-times-word monomials by the
 * straightening relations (commutators) and the absorption relations (monoid
 * elements move onto letters), cut off at the window and at words of length
 * lie_cap.  The quotient basis is adapted to the Lie filtration: the word
 * length of a coset representative is its filtration level. */
struct TruncatedEnvelope {
  SuspensiveLie source;
  DegreeWindow window;
  int lie_cap;
  PresentedBialgebra algebra;
  RigidStructure rigid;

  std::vector<EnvelopeMonomial> reps;  // per algebra basis index
  std::vector<int> level;              // reps[i].word.size()
  std::vector<SparseVec> inclusion;    // source basis index -> algebra coords

  /* Populated by build_z only: image of each basis vector of the ambient
   * envelope under the quotient map. */
  std::vector<SparseVec> quotient_of;

  std::vector<std::string> notes;

  /* Commutator Lie algebra view of the envelope, with the monoid acting by
   * grouplike multiplication.  Brackets and action entries whose products
   * leave the truncation are left undeclared. */
  std::shared_ptr<SuspensiveLie> commutator_lie;

  TruncatedEnvelope(SuspensiveLie src, DegreeWindow win, int cap, PresentedBialgebra alg,
                    RigidStructure rig)
      : source(std::move(src)),
        window(std::move(win)),
        lie_cap(cap),
        algebra(std::move(alg)),
        rigid(std::move(rig)) {}
};

/* Universal enveloping bialgebra of L with grouplikes adjoined for every
 * window degree, truncated to the window and to words of length <= lie_cap.
 * L must pass check_suspensive (SchemaError otherwise). */
TruncatedEnvelope build_w(const SuspensiveLie& L, const DegreeWindow& window, int lie_cap);

/* Default cap: the largest word length with a nonzero symmetric-power block
 * inside the window.  Only finite for the free monoid with every letter in
 * positive degree; other inputs must pass lie_cap explicitly. */
TruncatedEnvelope build_w(const SuspensiveLie& L, const DegreeWindow& window);

/* Quotient of build_w by the two-sided ideal generated by products of
 * generalized primitives in comparable degrees and by grouplike multiples of
 * same-degree generalized primitives.  When L is not torsion a warning note
 * is recorded.  OverflowError when an in-window ideal generator or the
 * induced coproduct cannot be computed inside the truncation.  Pass w_out to
 * also receive the ambient envelope. */
TruncatedEnvelope build_z(const SuspensiveLie& L, const DegreeWindow& window, int lie_cap,
                          TruncatedEnvelope* w_out = nullptr);

/* The map sending each basis vector of the source to its length-one coset.
 * Domain is env.source; codomain is *env.commutator_lie. */
SuspensiveMorphism canonical_inclusion(const TruncatedEnvelope& env);

/* Smallest n with v in the span of cosets represented by words of length
 * <= n; the quotient basis is adapted to the filtration, so this is the
 * largest representative length in the support. */
int lie_filtration_level(const TruncatedEnvelope& env, const SparseVec& v);

/* Associated graded bialgebra of the Lie filtration, presented on the same
 * basis: products keep the components of level exactly level(a)+level(b),
 * coproducts keep the components whose leg levels add up to the source
 * level.  Overflowing products stay overflowing. */
PresentedBialgebra assoc_graded(const TruncatedEnvelope& env);

/* Dimension of the degree-d block of the n-th symmetric power of the
 * underlying module of L over the monoid algebra, for every window degree d.
 * Computed from multiset monomials modulo the multilinearity relations,
 * independently of build_w. */
std::map<int, int> sym_power_kg(const SuspensiveLie& L, int n, const DegreeWindow& window);

/* Basis count per (suspensive degree, filtration level). */
std::map<std::pair<int, int>, int> bidegree_dims(const TruncatedEnvelope& env);

}  // namespace suspla
