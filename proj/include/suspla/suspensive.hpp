#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "suspla/linalg.hpp"
#include "suspla/monoid.hpp"

namespace suspla {

struct BasisElement {
  std::string name;
  int degree = 0;
};

/* Finitely supported G-graded vector space with a unital associative action
 * of the degree monoid that moves the grading along: g sends the degree-n
 * block into the degree g*n block.
 *
 * Action storage is sparse.  Finite monoids carry one block map per element
 * (absent non-identity elements act as zero, the absent identity acts as the
 * identity).  The free monoid stores only the generator map; powers are
 * composed on demand and memoized. */
class SuspensiveSpace {
 public:
  SuspensiveSpace(Field field, Monoid monoid, std::vector<BasisElement> basis);
  SuspensiveSpace(const SuspensiveSpace& o)
      : field_(o.field_), monoid_(o.monoid_), basis_(o.basis_), blocks_(o.blocks_),
        action_(o.action_) {}
  SuspensiveSpace(SuspensiveSpace&& o) noexcept
      : field_(std::move(o.field_)), monoid_(std::move(o.monoid_)), basis_(std::move(o.basis_)),
        blocks_(std::move(o.blocks_)), action_(std::move(o.action_)) {}
  SuspensiveSpace& operator=(const SuspensiveSpace& o) {
    if (this != &o) {
      field_ = o.field_;
      monoid_ = o.monoid_;
      basis_ = o.basis_;
      blocks_ = o.blocks_;
      action_ = o.action_;
      power_memo_.clear();
    }
    return *this;
  }
  SuspensiveSpace& operator=(SuspensiveSpace&& o) noexcept {
    if (this != &o) {
      field_ = std::move(o.field_);
      monoid_ = std::move(o.monoid_);
      basis_ = std::move(o.basis_);
      blocks_ = std::move(o.blocks_);
      action_ = std::move(o.action_);
      power_memo_.clear();
    }
    return *this;
  }

  const Field& field() const { return field_; }
  const Monoid& monoid() const { return monoid_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int degree_of(int idx) const { return basis_[idx].degree; }
  int index_of(const std::string& name) const;  // -1 when absent
  const std::vector<int>& block(int degree) const;
  int block_dim(int degree) const { return static_cast<int>(block(degree).size()); }
  std::vector<int> populated_degrees() const;

  void set_action(int g, int basis_idx, SparseVec image);
  const std::map<int, std::map<int, SparseVec>>& action_data() const { return action_; }

  /* Action of a monoid element on one basis vector / a general vector. */
  SparseVec act_basis(int g, int idx) const;
  SparseVec act(int g, const SparseVec& v) const;

  std::string describe(int idx) const { return basis_[idx].name; }

 protected:
  Field field_;
  Monoid monoid_;
  std::vector<BasisElement> basis_;
  std::map<int, std::vector<int>> blocks_;
  std::map<int, std::map<int, SparseVec>> action_;

 private:
  mutable std::map<std::pair<int, int>, SparseVec> power_memo_;
  mutable std::mutex memo_mutex_;
};

/* Adds a bracket with structure constants.  A declared entry (i,j) implies
 * the transposed entry with the opposite sign unless that one is declared
 * too (then consistency is part of the axiom check). */
class SuspensiveLie : public SuspensiveSpace {
 public:
  using SuspensiveSpace::SuspensiveSpace;

  void set_bracket(int i, int j, SparseVec value);
  const std::map<std::pair<int, int>, SparseVec>& bracket_data() const { return bracket_; }

  /* Completed bracket on basis vectors (antisymmetry filled in). */
  SparseVec bracket_basis(int i, int j) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

 private:
  std::map<std::pair<int, int>, SparseVec> bracket_;
};

/* Axiom scan: grading compatibility of action and bracket, unitality and
 * associativity of the action, antisymmetry, Jacobi, and bilinearity of the
 * bracket over the monoid action.  Every failure carries a witness. */
Verdict check_suspensive(const SuspensiveLie& L, const DegreeWindow& window);

struct TorsionFlags {
  bool torsion_free = true;  // no nonzero x with deg(x)*x = 0
  bool torsion = true;       // every x satisfies deg(x)*x = 0
  std::vector<std::string> notes;
};

/* Degreewise torsion scan.  Deciding the flag at degree Q needs the square
 * Q^2 inside the window; by default that raises WindowTooSmall, while
 * skip_unverifiable records the gap and decides from the remaining degrees
 * (callers that only claim in-window conclusions use that mode). */
TorsionFlags torsion_flags(const SuspensiveSpace& V, const DegreeWindow& window,
                           bool skip_unverifiable = false);

SuspensiveLie underlying_abelian(const SuspensiveLie& L);

/* Degree-preserving linear map between suspensive Lie algebras. */
struct SuspensiveMorphism {
  const SuspensiveLie* domain = nullptr;
  const SuspensiveLie* codomain = nullptr;
  std::map<int, SparseVec> images;  // domain basis index -> codomain vector

  SparseVec apply(const SparseVec& v) const;
  SparseVec apply_basis(int idx) const;
};

Verdict check_suspensive_morphism(const SuspensiveMorphism& f, const DegreeWindow& window);
SuspensiveMorphism compose(const SuspensiveMorphism& g, const SuspensiveMorphism& f);

/* Basis of the linear space of degree-preserving, action-commuting maps
 * L -> M (bracket compatibility is not imposed here; it is linear only in
 * the abelian case and callers filter otherwise). */
std::vector<SuspensiveMorphism> equivariant_map_space(const SuspensiveLie& L,
                                                      const SuspensiveLie& M);

}  // namespace suspla
