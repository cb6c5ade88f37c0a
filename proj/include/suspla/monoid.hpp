#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suspla/error.hpp"

namespace suspla {

/* Commutative degree monoid.  Two presentations: an exhaustively validated
 * finite multiplication table, or the free monoid on one generator whose
 * elements are exponents.  Elements are plain ints in both cases (index into
 * the table, or the exponent). */
class Monoid {
 public:
  enum class Kind : uint8_t { FiniteTable, FreeRank1 };

  static Monoid finite_table(std::vector<std::string> names, int identity,
                             std::vector<std::vector<int>> table);
  static Monoid free_rank1(std::string generator);

  Kind kind() const { return kind_; }
  int identity() const { return kind_ == Kind::FiniteTable ? identity_ : 0; }
  int size() const;  // finite only
  const std::string& generator() const { return generator_; }

  int mul(int a, int b) const;
  /* Left divisibility a | b: some g with g*a = b.  Total order on exponents
   * for the free case; exhaustive search on tables. */
  bool divides(int a, int b) const;
  std::optional<int> divisor_witness(int a, int b) const;

  bool is_linear() const;  // divisibility compares every pair
  bool is_group() const;

  /* All elements for a table; exponents 0..bound for the free monoid. */
  std::vector<int> enumerate_window(int bound) const;

  std::string name(int e) const;
  int parse_element(const std::string& text) const;

  bool operator==(const Monoid& o) const;
  bool operator!=(const Monoid& o) const { return !(*this == o); }

 private:
  Monoid() = default;
  void check_element(int e) const;

  Kind kind_ = Kind::FreeRank1;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::string generator_ = "Q";
};

/* Finite, divisor-closed degree set containing the identity.  All truncated
 * computations are relative to one of these. */
class DegreeWindow {
 public:
  DegreeWindow(Monoid monoid, std::vector<int> elements);
  static DegreeWindow up_to(const Monoid& m, int bound);

  const Monoid& monoid() const { return monoid_; }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int e) const;
  /* Product if it stays inside the window. */
  std::optional<int> mul(int a, int b) const;
  int index_of(int e) const;  // position in elements(), -1 when absent

  bool operator==(const DegreeWindow& o) const {
    return monoid_ == o.monoid_ && elements_ == o.elements_;
  }

 private:
  Monoid monoid_;
  std::vector<int> elements_;
};

}  // namespace suspla
