#pragma once

#include <optional>
#include <vector>

#include "suspla/scalar.hpp"

namespace suspla {

/* Sparse vector: term list sorted by strictly increasing index, no explicit
 * zeros.  The zero vector is the empty list. */
class SparseVec {
 public:
  using Term = std::pair<int, Scalar>;

  SparseVec() = default;
  static SparseVec unit(int index, Scalar coeff);
  static SparseVec of_terms(std::vector<Term> terms);  // validates the invariant

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int leading_index() const;  // smallest index; -1 on zero
  Scalar get(int index, const Field& f) const;

  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec scaled(const Scalar& c) const;
  /* this += c * o, the elimination workhorse. */
  void axpy(const Scalar& c, const SparseVec& o);

  bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Term> terms_;
};

/* Row space in reduced row echelon form: pivot columns strictly increasing,
 * each pivot entry 1, pivot columns cleared in all other rows.  RREF is
 * unique per row space, so equal spans compare equal row-by-row regardless
 * of the order rows were fed in. */
class Subspace {
 public:
  Subspace(Field field, int ambient_dim) : field_(field), ambient_(ambient_dim) {}
  static Subspace full(Field field, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const Field& field() const { return field_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /* Residual of v after clearing all pivot coordinates. */
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  bool contains_all(const Subspace& other) const;
  /* Coefficients of v against the RREF rows, or nullopt if v is outside. */
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  bool operator==(const Subspace& o) const;

  friend Subspace rref(const std::vector<SparseVec>& rows, Field field, int ambient_dim);

 private:
  Field field_;
  int ambient_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;

  void insert_and_reduce(SparseVec v);
  void dense_build(const std::vector<SparseVec>& rows);
};

/* Canonical RREF of an arbitrary generating set.  Small ambient spaces take a
 * dense elimination path; the sparse path handles the rest.  Both produce the
 * same (unique) reduced form. */
Subspace rref(const std::vector<SparseVec>& rows, Field field, int ambient_dim);

/* Null space of the linear map whose rows (functionals on a domain of the
 * given dimension) are supplied.  rank + nullity = domain_dim. */
Subspace kernel(const std::vector<SparseVec>& rows, Field field, int domain_dim);

/* Quotient ambient/relations presented by coset representatives: the ambient
 * coordinates that are not pivotal in the relation space.  normal_form maps
 * any ambient vector to its canonical representative combination. */
class QuotientBasis {
 public:
  QuotientBasis(Subspace ambient, const Subspace& relations);

  const Subspace& ambient() const { return ambient_; }
  const std::vector<int>& representatives() const { return reps_; }
  int dim() const { return static_cast<int>(reps_.size()); }

  /* Canonical representative, as coordinates against the ambient RREF rows
   * (supported only on representative coordinates). */
  SparseVec normal_form_coords(const SparseVec& v) const;
  /* Canonical representative as an ambient-space vector. */
  SparseVec normal_form(const SparseVec& v) const;

 private:
  Subspace ambient_;
  Subspace rel_coords_;  // relations rewritten in ambient coordinates
  std::vector<int> reps_;
};

}  // namespace suspla
