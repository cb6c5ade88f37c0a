#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "suspla/suspensive.hpp"

using namespace suspla;

namespace {

const Field Q = Field::rationals();

SparseVec sv(const Field& k, std::vector<std::pair<int, long>> terms) {
  std::vector<SparseVec::Term> out;
  for (auto [i, c] : terms) out.push_back({i, Scalar::of_int(k, c)});
  return SparseVec::of_terms(std::move(out));
}

/* Heisenberg-shaped fixture over the free monoid on s: x,y in degree s,
 * z in degree s^2, [x,y] = z, and s pushes x and y onto z. */
SuspensiveLie heisenberg() {
  SuspensiveLie L(Q, Monoid::free_rank1("s"),
                  {{"x", 1}, {"y", 1}, {"z", 2}});
  L.set_bracket(0, 1, sv(Q, {{2, 1}}));
  L.set_action(1, 0, sv(Q, {{2, 1}}));
  L.set_action(1, 1, sv(Q, {{2, 1}}));
  return L;
}

bool has_witness(const Verdict& v, const std::string& needle) {
  for (const auto& w : v.witnesses)
    if (w.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("graded blocks and sparse action storage") {
  SuspensiveLie L = heisenberg();
  CHECK(L.dim() == 3);
  CHECK(L.block_dim(1) == 2);
  CHECK(L.block_dim(2) == 1);
  CHECK(L.block_dim(5) == 0);
  CHECK(L.populated_degrees() == std::vector<int>{1, 2});
  CHECK(L.index_of("y") == 1);
  CHECK(L.index_of("missing") == -1);

  // identity acts as identity without being stored
  CHECK(L.act_basis(0, 0) == sv(Q, {{0, 1}}));
  // absent images are zero
  CHECK(L.act_basis(1, 2).is_zero());
  // powers of the generator compose
  CHECK(L.act_basis(1, 0) == sv(Q, {{2, 1}}));
  CHECK(L.act_basis(2, 0).is_zero());
  CHECK(L.act(1, sv(Q, {{0, 2}, {1, 3}})) == sv(Q, {{2, 5}}));

  CHECK_THROWS_AS(L.set_action(2, 0, sv(Q, {{2, 1}})), SchemaError);
  CHECK_THROWS_AS(L.set_action(1, 7, sv(Q, {{2, 1}})), SchemaError);
}

TEST_CASE("free monoid powers are composed, not tabulated") {
  SuspensiveSpace V(Q, Monoid::free_rank1("s"),
                    {{"a0", 0}, {"a1", 1}, {"a2", 2}, {"a3", 3}});
  for (int i = 0; i < 3; ++i) V.set_action(1, i, sv(Q, {{i + 1, 1}}));
  CHECK(V.act_basis(3, 0) == sv(Q, {{3, 1}}));
  CHECK(V.act_basis(3, 0) == sv(Q, {{3, 1}}));  // memoized path
  CHECK(V.act_basis(2, 1) == sv(Q, {{3, 1}}));
  CHECK(V.act_basis(4, 0).is_zero());
  CHECK(V.act_basis(17, 2).is_zero());
}

TEST_CASE("bracket completion by antisymmetry") {
  SuspensiveLie L = heisenberg();
  CHECK(L.bracket_basis(0, 1) == sv(Q, {{2, 1}}));
  CHECK(L.bracket_basis(1, 0) == sv(Q, {{2, -1}}));
  CHECK(L.bracket_basis(0, 0).is_zero());
  CHECK(L.bracket_basis(2, 0).is_zero());
  CHECK(L.bracket(sv(Q, {{0, 2}}), sv(Q, {{1, 3}})) == sv(Q, {{2, 6}}));
  CHECK(L.bracket(sv(Q, {{0, 1}, {1, 1}}), sv(Q, {{0, 1}, {1, 1}})).is_zero());
}

TEST_CASE("axiom scan passes on a well-formed algebra") {
  SuspensiveLie L = heisenberg();
  DegreeWindow w = DegreeWindow::up_to(L.monoid(), 4);
  Verdict v = check_suspensive(L, w);
  CHECK(v.status == Status::Pass);
  CHECK(v.witnesses.empty());
}

TEST_CASE("axiom scan: action leaving its block") {
  SuspensiveLie L(Q, Monoid::free_rank1("s"), {{"x", 0}, {"y", 2}});
  L.set_action(1, 0, sv(Q, {{1, 1}}));  // s*x should land in degree s, y sits in s^2
  Verdict v = check_suspensive(L, DegreeWindow::up_to(L.monoid(), 4));
  CHECK(v.status == Status::Fail);
  CHECK(has_witness(v, "action of s on x"));
}

TEST_CASE("axiom scan: bracket leaving its block") {
  SuspensiveLie L(Q, Monoid::free_rank1("s"), {{"x0", 0}, {"x1", 1}});
  L.set_bracket(0, 1, sv(Q, {{0, 1}}));  // [x0,x1] = x0 sits in degree 1, not s
  Verdict v = check_suspensive(L, DegreeWindow::up_to(L.monoid(), 2));
  CHECK(v.status == Status::Fail);
  CHECK(has_witness(v, "bracket [x0,x1] leaves the degree-s block"));
}

TEST_CASE("axiom scan: antisymmetry violations") {
  SuspensiveLie L(Q, Monoid::free_rank1("s"), {{"a", 0}, {"b", 0}});
  L.set_bracket(0, 0, sv(Q, {{0, 1}}));        // [a,a] = a
  L.set_bracket(0, 1, sv(Q, {{0, 1}}));        // [a,b] = a
  L.set_bracket(1, 0, sv(Q, {{0, 1}}));        // [b,a] = a, should be -a
  Verdict v = check_suspensive(L, DegreeWindow::up_to(L.monoid(), 1));
  CHECK(v.status == Status::Fail);
  CHECK(has_witness(v, "[a,a] is nonzero"));
  CHECK(has_witness(v, "do not sum to zero"));
}

TEST_CASE("axiom scan: Jacobi failure") {
  SuspensiveLie L(Q, Monoid::free_rank1("s"), {{"a", 0}, {"b", 0}, {"c", 0}});
  L.set_bracket(0, 1, sv(Q, {{2, 1}}));  // [a,b] = c
  L.set_bracket(1, 2, sv(Q, {{0, 1}}));  // [b,c] = a
  L.set_bracket(2, 0, sv(Q, {{0, 1}}));  // [c,a] = a breaks the cycle
  Verdict v = check_suspensive(L, DegreeWindow::up_to(L.monoid(), 1));
  CHECK(v.status == Status::Fail);
  CHECK(has_witness(v, "Jacobi fails on (a,b,c)"));
}

TEST_CASE("axiom scan: bracket must be linear over the action") {
  SuspensiveLie L(Q, Monoid::free_rank1("s"),
                  {{"x", 0}, {"y", 0}, {"z", 0}, {"x1", 1}, {"w", 1}});
  L.set_bracket(0, 1, sv(Q, {{2, 1}}));   // [x,y] = z
  L.set_action(1, 0, sv(Q, {{3, 1}}));    // s*x = x1
  L.set_bracket(3, 1, sv(Q, {{4, 1}}));   // [x1,y] = w, but s*[x,y] = s*z = 0
  Verdict v = check_suspensive(L, DegreeWindow::up_to(L.monoid(), 2));
  CHECK(v.status == Status::Fail);
  CHECK(has_witness(v, "not s-linear in the first slot at (x,y)"));
}

TEST_CASE("axiom scan over a finite group: unit and associativity") {
  Monoid c2 = Monoid::finite_table({"1", "t"}, 0, {{0, 1}, {1, 0}});

  SuspensiveLie good(Q, c2, {{"e", 0}, {"f", 1}});
  good.set_action(1, 0, sv(Q, {{1, 1}}));
  good.set_action(1, 1, sv(Q, {{0, 1}}));
  DegreeWindow w(c2, {0, 1});
  CHECK(check_suspensive(good, w).status == Status::Pass);

  SuspensiveLie bad_unit(Q, c2, {{"e", 0}});
  bad_unit.set_action(0, 0, sv(Q, {{0, 2}}));  // declares 1*e = 2e
  Verdict v1 = check_suspensive(bad_unit, w);
  CHECK(v1.status == Status::Fail);
  CHECK(has_witness(v1, "identity action is not the identity on e"));

  SuspensiveLie bad_assoc(Q, c2, {{"e", 0}, {"f", 1}});
  bad_assoc.set_action(1, 0, sv(Q, {{1, 1}}));
  bad_assoc.set_action(1, 1, sv(Q, {{0, 2}}));  // t*(t*e) = 2e but (t*t)*e = e
  Verdict v2 = check_suspensive(bad_assoc, w);
  CHECK(v2.status == Status::Fail);
  CHECK(has_witness(v2, "action associativity fails"));
}

TEST_CASE("torsion flags over a group") {
  Monoid c2 = Monoid::finite_table({"1", "t"}, 0, {{0, 1}, {1, 0}});
  SuspensiveSpace V(Q, c2, {{"e", 0}, {"f", 1}});
  V.set_action(1, 0, sv(Q, {{1, 1}}));
  V.set_action(1, 1, sv(Q, {{0, 1}}));
  TorsionFlags flags = torsion_flags(V, DegreeWindow(c2, {0, 1}));
  CHECK(flags.torsion_free);
  CHECK_FALSE(flags.torsion);
}

TEST_CASE("torsion flags: everything annihilated by its degree") {
  SuspensiveSpace V(Q, Monoid::free_rank1("s"), {{"t1", 1}});
  TorsionFlags flags = torsion_flags(V, DegreeWindow::up_to(V.monoid(), 2));
  CHECK_FALSE(flags.torsion_free);
  CHECK(flags.torsion);
  REQUIRE(!flags.notes.empty());
  CHECK(flags.notes.front().find("t1") != std::string::npos);
}

TEST_CASE("torsion flags: mixed block is neither") {
  SuspensiveSpace V(Q, Monoid::free_rank1("s"),
                    {{"u1", 1}, {"v1", 1}, {"w2", 2}});
  V.set_action(1, 0, sv(Q, {{2, 1}}));  // s*u1 = w2, s*v1 = 0, s*w2 = 0
  TorsionFlags flags = torsion_flags(V, DegreeWindow::up_to(V.monoid(), 4));
  CHECK_FALSE(flags.torsion_free);
  CHECK_FALSE(flags.torsion);
  bool saw_v1 = false;
  for (const auto& n : flags.notes) saw_v1 |= n.find("v1") != std::string::npos;
  CHECK(saw_v1);
}

TEST_CASE("torsion flags need the square of each populated degree") {
  SuspensiveSpace V(Q, Monoid::free_rank1("s"), {{"w2", 2}});
  DegreeWindow w = DegreeWindow::up_to(V.monoid(), 3);  // 2*2 = 4 falls outside
  CHECK_THROWS_AS(torsion_flags(V, w), WindowTooSmall);

  TorsionFlags relaxed = torsion_flags(V, w, true);
  CHECK(relaxed.torsion_free);  // nothing decidable contradicted it
  REQUIRE(!relaxed.notes.empty());
  CHECK(relaxed.notes.front().find("unverifiable") != std::string::npos);
}

TEST_CASE("underlying abelian algebra forgets the bracket only") {
  SuspensiveLie L = heisenberg();
  SuspensiveLie A = underlying_abelian(L);
  CHECK(A.bracket_basis(0, 1).is_zero());
  CHECK(A.act_basis(1, 0) == L.act_basis(1, 0));
  CHECK(A.dim() == L.dim());
}

TEST_CASE("morphism check catches bracket breakage, compose works") {
  SuspensiveLie L = heisenberg();
  DegreeWindow w = DegreeWindow::up_to(L.monoid(), 4);

  SuspensiveMorphism id;
  id.domain = &L;
  id.codomain = &L;
  for (int i = 0; i < L.dim(); ++i) id.images[i] = sv(Q, {{i, 1}});
  CHECK(check_suspensive_morphism(id, w).status == Status::Pass);

  SuspensiveMorphism swap;  // x -> y kills the bracket but respects the action
  swap.domain = &L;
  swap.codomain = &L;
  swap.images[0] = sv(Q, {{1, 1}});
  swap.images[1] = sv(Q, {{1, 1}});
  swap.images[2] = sv(Q, {{2, 1}});
  Verdict v = check_suspensive_morphism(swap, w);
  CHECK(v.status == Status::Fail);
  CHECK(has_witness(v, "does not preserve [x,y]"));

  SuspensiveMorphism twice = compose(id, id);
  CHECK(twice.apply_basis(0) == sv(Q, {{0, 1}}));

  SuspensiveMorphism wrong_degree;
  wrong_degree.domain = &L;
  wrong_degree.codomain = &L;
  wrong_degree.images[0] = sv(Q, {{2, 1}});  // x (degree s) -> z (degree s^2)
  Verdict v2 = check_suspensive_morphism(wrong_degree, w);
  CHECK(v2.status == Status::Fail);
  CHECK(has_witness(v2, "not homogeneous"));
}

TEST_CASE("equivariant map space dimensions") {
  Monoid s = Monoid::free_rank1("s");

  SuspensiveLie V(Q, s, {{"a0", 0}, {"a1", 1}});
  V.set_action(1, 0, sv(Q, {{1, 1}}));
  SuspensiveLie W(Q, s, {{"b0", 0}, {"b1", 1}});
  W.set_action(1, 0, sv(Q, {{1, 1}}));

  auto maps = equivariant_map_space(V, W);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0].apply_basis(0) == sv(Q, {{0, 1}}));
  CHECK(maps[0].apply_basis(1) == sv(Q, {{1, 1}}));

  // A codomain with zero action: f(s*a0) = f(a1) must vanish since s*f(a0) = 0.
  SuspensiveLie W2(Q, s, {{"b0", 0}, {"b1", 1}});
  auto maps2 = equivariant_map_space(V, W2);
  REQUIRE(maps2.size() == 1);
  CHECK(maps2[0].apply_basis(0) == sv(Q, {{0, 1}}));
  CHECK(maps2[0].apply_basis(1).is_zero());
  CHECK(check_suspensive_morphism(maps2[0], DegreeWindow::up_to(s, 2)).status == Status::Pass);

  SuspensiveLie W3(Q, s, {{"b0", 0}});
  auto maps3 = equivariant_map_space(V, W3);
  REQUIRE(maps3.size() == 1);  // a1 has nowhere to go, a0 -> b0 is still fine
  CHECK(maps3[0].apply_basis(1).is_zero());
}

TEST_CASE("basis validation") {
  CHECK_THROWS_AS(SuspensiveSpace(Q, Monoid::free_rank1("s"),
                                  {{"a", 0}, {"a", 1}}),
                  SchemaError);
  CHECK_THROWS_AS(SuspensiveSpace(Q, Monoid::free_rank1("s"), {{"", 0}}),
                  SchemaError);
  Monoid c2 = Monoid::finite_table({"1", "t"}, 0, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(SuspensiveSpace(Q, c2, {{"a", 5}}), SchemaError);
}
