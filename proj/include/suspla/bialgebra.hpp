#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "suspla/suspensive.hpp"

namespace suspla {

/* Element of the tensor square of a presented algebra: term list over ordered
 * pairs of basis indices, sorted, no zero coefficients. */
class Tensor2 {
 public:
  using Index = std::pair<int, int>;
  using Term = std::pair<Index, Scalar>;

  Tensor2() = default;
  static Tensor2 of_terms(std::vector<Term> terms);  // sorts, merges, drops zeros
  static Tensor2 pure(int i, int j, Scalar c);
  /* a (x) b with bilinear expansion. */
  static Tensor2 outer(const SparseVec& a, const SparseVec& b);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 scaled(const Scalar& c) const;
  void axpy(const Scalar& c, const Tensor2& o);
  Tensor2 swapped() const;  // exchange the two legs

  bool operator==(const Tensor2& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Term> terms_;
};

/* Bialgebra presented by structure constants on a finite basis.
 *
 * Multiplication may be partial: a basis product marked overflow fell out of
 * the truncation that produced the table, and asking for it raises
 * OverflowError instead of silently returning zero.  Comultiplication and the
 * counit are total.
 *
 * The basis is optionally graded by a commutative monoid.  When degrees are
 * present the coproduct is required (and checked) to be block-diagonal:
 * comult of a degree-d element lies in block d tensor block d. */
class PresentedBialgebra {
 public:
  struct Element {
    std::string name;
    std::optional<int> degree;
  };

  PresentedBialgebra(Field field, std::vector<std::string> names);  // ungraded
  PresentedBialgebra(Field field, Monoid monoid, std::vector<Element> basis);

  const Field& field() const { return field_; }
  bool graded() const { return monoid_.has_value(); }
  const Monoid& monoid() const;  // throws SchemaError when ungraded
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Element>& basis() const { return basis_; }
  const std::string& name(int idx) const { return basis_[idx].name; }
  std::optional<int> degree_of(int idx) const { return basis_[idx].degree; }
  int index_of(const std::string& name) const;  // -1 when absent
  /* Graded: indices of the degree-d block.  Ungraded: every index, for any d. */
  std::vector<int> block(int degree) const;

  void set_unit(SparseVec u) { unit_ = std::move(u); }
  void set_counit(int idx, Scalar value);
  void set_mult(int i, int j, SparseVec value);
  void set_mult_overflow(int i, int j);
  void set_comult(int idx, Tensor2 value);

  const SparseVec& unit() const { return unit_; }
  Scalar counit_basis(int idx) const;
  Scalar counit(const SparseVec& v) const;
  Tensor2 comult_basis(int idx) const;  // absent entries read as zero
  Tensor2 comult(const SparseVec& v) const;

  bool mult_defined(int i, int j) const { return !overflow_.count({i, j}); }
  std::optional<SparseVec> try_mult_basis(int i, int j) const;
  SparseVec mult_basis(int i, int j) const;  // throws OverflowError
  /* Bilinear extension; overflow only matters under a nonzero coefficient. */
  std::optional<SparseVec> try_mult(const SparseVec& x, const SparseVec& y) const;
  SparseVec mult(const SparseVec& x, const SparseVec& y) const;
  /* Componentwise product on the tensor square. */
  std::optional<Tensor2> try_mult_tensor(const Tensor2& s, const Tensor2& t) const;

  const std::map<std::pair<int, int>, SparseVec>& mult_table() const { return mult_; }
  const std::set<std::pair<int, int>>& overflow_pairs() const { return overflow_; }
  const std::map<int, Tensor2>& comult_table() const { return comult_; }
  const std::map<int, Scalar>& counit_table() const { return counit_; }

 private:
  Field field_;
  std::optional<Monoid> monoid_;
  std::vector<Element> basis_;
  SparseVec unit_;
  std::map<int, Scalar> counit_;
  std::map<std::pair<int, int>, SparseVec> mult_;
  std::set<std::pair<int, int>> overflow_;
  std::map<int, Tensor2> comult_;

  void check_index(int idx) const;
};

/* Distinguished family of central grouplikes indexed by a window in the
 * degree monoid.  Values are elements (not necessarily basis vectors); the
 * axioms are verified by check_rigid, not assumed. */
struct RigidStructure {
  Monoid monoid;
  std::map<int, SparseVec> eta;

  bool has(int g) const { return eta.count(g) != 0; }
  const SparseVec& eta_of(int g) const;  // throws WindowTooSmall when absent
};

/* Identity-only rigid structure: eta(1) = the unit of A. */
RigidStructure trivial_rigid(const PresentedBialgebra& A);

/* eta(g) is grouplike and central, eta is injective and multiplicative where
 * defined, eta(identity) is the unit, and (graded case) eta(g) is homogeneous
 * of degree g.  Overflowing products contribute Indeterminate. */
Verdict check_rigid(const PresentedBialgebra& A, const RigidStructure& rigid);

struct BialgebraReport {
  Verdict unital;
  Verdict associativity;
  Verdict counit;
  Verdict coassociativity;
  Verdict comult_multiplicative;
  Verdict counit_multiplicative;
  Verdict grading;

  Verdict overall() const;
};

/* Axiom scan restricted to defined products; every failure carries a witness
 * naming the basis elements involved. */
BialgebraReport check_bialgebra(const PresentedBialgebra& A);

bool is_cocommutative(const PresentedBialgebra& A);

/* Canonical basis of the space of a with comult(a) = a (x) eta(Q) +
 * eta(Q) (x) a, cut out inside the degree-Q block (graded) or the whole
 * space (ungraded).  Rows live in the ambient coordinates of A. */
Subspace gp_basis(const PresentedBialgebra& A, const RigidStructure& rigid, int Q);

/* For every pair of window degrees and every pair of generalized primitives
 * a, a' in those degrees, checks
 *   0 = a.eta(Q') (x) eta(Q).a' + eta(Q).a' (x) a.eta(Q')
 *     - a'.eta(Q) (x) eta(Q').a - eta(Q').a (x) a'.eta(Q). */
Verdict check_pgc(const PresentedBialgebra& A, const RigidStructure& rigid,
                  const DegreeWindow& window);

/* The generalized primitives as a suspensive Lie algebra: graded by window
 * degrees, action by left multiplication with eta(g), bracket the commutator,
 * all in gp_basis coordinates.  Raises NotClosedUnderBracket when the
 * compatibility check fails (or a commutator escapes the primitives), and
 * OverflowError when a needed product fell out of the truncation. */
SuspensiveLie gp_lie(const PresentedBialgebra& A, const RigidStructure& rigid,
                     const DegreeWindow& window);

/* Span growth from grouplikes and generalized primitives, closed under the
 * defined products.  Pass when the closure is the whole in-window space;
 * Fail when it stabilizes short of that with every product available;
 * Indeterminate when an overflowing product could still change the answer. */
Verdict is_gpg(const PresentedBialgebra& A, const RigidStructure& rigid,
               const DegreeWindow& window);

/* x y = 0 whenever x is a Q-generalized-primitive, y is a Q'-one, and Q
 * divides Q'. */
Verdict is_left_sided(const PresentedBialgebra& A, const RigidStructure& rigid,
                      const DegreeWindow& window);

/* No nonzero Q-generalized-primitive is annihilated by eta(Q).  Degrees whose
 * square leaves the window are reported, not guessed. */
Verdict is_torsion_free_bialgebra(const PresentedBialgebra& A, const RigidStructure& rigid,
                                  const DegreeWindow& window);

/* The obstruction to a product of generalized primitives being one again:
 *   sum over proper nonempty U of [n] of
 *     prod_i (i in U ? eta(d_i) : x_i)  (x)  prod_i (i in U ? x_i : eta(d_i))
 * where d_i is the recorded degree of x_i.  Equals
 * comult(x_1...x_n) - (x_1...x_n) (x) eta(d) - eta(d) (x) (x_1...x_n) with
 * d the product degree, which the tests exercise. */
Tensor2 s_n(const PresentedBialgebra& A, const RigidStructure& rigid,
            const std::vector<SparseVec>& xs, const std::vector<int>& degrees);

/* Truncated monoid bialgebra on the window: basis g for each window element,
 * products from the monoid (overflow when they leave the window), every basis
 * vector grouplike. */
PresentedBialgebra monoid_algebra(Field field, const DegreeWindow& window);
RigidStructure monoid_algebra_rigid(const PresentedBialgebra& A, const DegreeWindow& window);

/* Dual of the cyclic group algebra on n elements: basis d0..d{n-1} of delta
 * functionals, pointwise product, coproduct dual to the group law.  Ungraded. */
PresentedBialgebra dual_cyclic_group_algebra(int n, Field field);

/* All grouplikes of that dual, i.e. the characters of the cyclic group over
 * the field: vectors sum_j r^j d_j for each n-th root of unity r.  Exact
 * enumeration (rational roots, or exhaustive search mod p). */
std::vector<SparseVec> grouplikes_of_dual_cyclic_group_algebra(int n, Field field);

}  // namespace suspla
