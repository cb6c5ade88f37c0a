#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suspla/monoid.hpp"

using namespace suspla;

namespace {

Monoid c2() { return Monoid::finite_table({"e", "s"}, 0, {{0, 1}, {1, 0}}); }

Monoid c3() {
  return Monoid::finite_table({"e", "s", "s2"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

Monoid klein4() {
  return Monoid::finite_table({"e", "a", "b", "ab"}, 0,
                              {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

/* Commutative, associative, but not linear: neither a nor b divides the
 * other (all length-2 products collapse onto z). */
Monoid collapsed() {
  return Monoid::finite_table({"1", "a", "b", "z"}, 0,
                              {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}});
}

}  // namespace

TEST_CASE("finite table validation") {
  CHECK_NOTHROW(c2());
  CHECK_NOTHROW(c3());
  CHECK_NOTHROW(klein4());
  /* Commutative but the declared identity absorbs instead of fixing. */
  CHECK_THROWS_WITH_AS(Monoid::finite_table({"e", "s"}, 0, {{0, 0}, {0, 0}}),
                       doctest::Contains("identity axiom"), SchemaError);
  /* Non-commutative table. */
  CHECK_THROWS_WITH_AS(Monoid::finite_table({"e", "a", "b"}, 0,
                                            {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}),
                       doctest::Contains("commutativity"), SchemaError);
  /* Non-associative: (a*a)*b = z*b = z vs a*(a*b) = a*a = ... tweak collapsed. */
  CHECK_THROWS_WITH_AS(Monoid::finite_table({"1", "a", "b", "z"}, 0,
                                            {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 0}, {3, 3, 0, 3}}),
                       doctest::Contains("associativity"), SchemaError);
  CHECK_THROWS_AS(Monoid::finite_table({"e", "e"}, 0, {{0, 1}, {1, 0}}), SchemaError);
}

TEST_CASE("divisibility") {
  Monoid f = Monoid::free_rank1("Q");
  CHECK(f.divides(1, 3));        // Q | Q^3
  CHECK_FALSE(f.divides(3, 1));
  CHECK(f.divides(0, 5));
  CHECK(f.divisor_witness(2, 5) == 3);

  Monoid g = c2();
  CHECK(g.divides(1, 0));  // s*s = e, so s | e
  CHECK(g.divides(0, 1));

  Monoid m = collapsed();
  CHECK_FALSE(m.divides(1, 2));  // a does not divide b
  CHECK_FALSE(m.divides(2, 1));
  CHECK(m.divides(1, 3));        // a | z
}

TEST_CASE("linearity and group detection") {
  CHECK(Monoid::free_rank1("Q").is_linear());
  CHECK_FALSE(Monoid::free_rank1("Q").is_group());
  CHECK(c2().is_linear());
  CHECK(c2().is_group());
  CHECK(c3().is_group());
  CHECK(klein4().is_group());
  CHECK(klein4().is_linear());  // groups: everything divides everything
  CHECK_FALSE(collapsed().is_linear());
  CHECK_FALSE(collapsed().is_group());
}

TEST_CASE("window enumeration and element names") {
  Monoid f = Monoid::free_rank1("s");
  CHECK(f.enumerate_window(3) == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(f.enumerate_window(-1), InvalidBound);
  CHECK(f.name(0) == "1");
  CHECK(f.name(1) == "s");
  CHECK(f.name(4) == "s^4");
  CHECK(f.parse_element("s^4") == 4);
  CHECK(f.parse_element("1") == 0);
  CHECK_THROWS_AS(f.parse_element("t"), SchemaError);
  CHECK_THROWS_AS(f.parse_element("s^-2"), SchemaError);

  CHECK(c3().enumerate_window(0) == std::vector<int>{0, 1, 2});
  CHECK(c3().parse_element("s2") == 2);
}

TEST_CASE("degree windows are divisor-closed") {
  Monoid f = Monoid::free_rank1("Q");
  DegreeWindow w = DegreeWindow::up_to(f, 4);
  CHECK(w.contains(4));
  CHECK_FALSE(w.contains(5));
  CHECK(w.mul(2, 2) == 4);
  CHECK_FALSE(w.mul(3, 2).has_value());
  CHECK(w.index_of(2) == 2);
  CHECK(w.index_of(9) == -1);

  CHECK_THROWS_AS(DegreeWindow(f, {0, 2}), SchemaError);   // misses Q dividing Q^2
  CHECK_THROWS_AS(DegreeWindow(f, {1, 2}), SchemaError);   // misses identity
  CHECK_NOTHROW(DegreeWindow(c2(), {0, 1}));
  /* In a group every element divides every other, so any proper subset
   * containing the identity fails closure. */
  CHECK_THROWS_AS(DegreeWindow(c3(), {0, 1}), SchemaError);
}
