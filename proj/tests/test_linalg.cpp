#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "suspla/linalg.hpp"

using namespace suspla;

namespace {

const Field QQ = Field::rationals();

SparseVec vec(std::vector<std::pair<int, long long>> terms) {
  std::vector<SparseVec::Term> t;
  for (auto& [i, c] : terms)
    if (c != 0) t.push_back({i, Scalar::of_int(QQ, c)});
  return SparseVec::of_terms(std::move(t));
}

/* Plain textbook elimination over rationals, coded independently of the
 * library paths, used as a rank oracle. */
int oracle_rank(std::vector<std::vector<BigRat>> m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols; ++c) {
    size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (static_cast<int>(r) == rank || m[r][c] == 0) continue;
      BigRat f = m[r][c] / m[rank][c];
      for (size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<BigRat>> densify(const std::vector<SparseVec>& rows, int dim) {
  std::vector<std::vector<BigRat>> m(rows.size(), std::vector<BigRat>(dim, BigRat(0)));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [i, s] : rows[r].terms()) m[r][i] = s.rational();
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic and canonical text") {
  Scalar a = Scalar::parse(QQ, "2/4");
  CHECK(a.str() == "1/2");
  CHECK((a + a).str() == "1");
  CHECK((a - a).is_zero());
  CHECK((-a).str() == "-1/2");
  CHECK((a / Scalar::of_int(QQ, 3)).str() == "1/6");
  CHECK(Scalar::parse(QQ, "-6/-4").str() == "3/2");

  Field f5 = Field::prime(5);
  Scalar b = Scalar::of_int(f5, 7);
  CHECK(b.str() == "2");
  CHECK(b.inverse().str() == "3");
  CHECK((b * b.inverse()).is_one());
  CHECK(Scalar::parse(f5, "-1").str() == "4");

  CHECK_THROWS_AS(Field::prime(6), SchemaError);
  CHECK_THROWS_AS((void)(a + b), KindMismatch);
  CHECK_THROWS_AS(Scalar::parse(QQ, "1/0"), SchemaError);
  CHECK_THROWS_AS(Scalar::parse(QQ, "x"), SchemaError);
}

TEST_CASE("sparse vector invariants") {
  CHECK_THROWS_AS(SparseVec::of_terms({{2, Scalar::of_int(QQ, 1)}, {1, Scalar::of_int(QQ, 1)}}),
                  SchemaError);
  CHECK_THROWS_AS(SparseVec::of_terms({{0, Scalar::zero(QQ)}}), SchemaError);
  SparseVec v = vec({{0, 1}, {3, -2}});
  SparseVec w = vec({{3, 2}, {5, 1}});
  CHECK((v + w) == vec({{0, 1}, {5, 1}}));
  CHECK((v - v).is_zero());
  CHECK(v.get(3, QQ).str() == "-2");
  CHECK(v.get(1, QQ).is_zero());
}

TEST_CASE("rref canonical form, determinism, idempotence") {
  std::vector<SparseVec> rows = {vec({{0, 2}, {1, 4}}), vec({{0, 1}, {1, 2}, {2, 2}}),
                                 vec({{2, 3}})};
  Subspace s = rref(rows, QQ, 3);
  CHECK(s.dim() == 2);
  CHECK(s.pivots() == std::vector<int>{0, 2});
  CHECK(s.rows()[0] == vec({{0, 1}, {1, 2}}));
  CHECK(s.rows()[1] == vec({{2, 1}}));

  /* Any row order, any scaling: same reduced form. */
  std::vector<SparseVec> shuffled = {rows[2].scaled(Scalar::of_int(QQ, -7)), rows[1], rows[0]};
  CHECK(rref(shuffled, QQ, 3) == s);
  CHECK(rref(s.rows(), QQ, 3) == s);

  CHECK(s.contains(vec({{0, 3}, {1, 6}, {2, 5}})));
  CHECK_FALSE(s.contains(vec({{1, 1}})));
}

TEST_CASE("dense and sparse elimination agree") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> coeff(-4, 4), idx(0, 39);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<SparseVec> rows;
    for (int r = 0; r < 12; ++r) {
      std::vector<SparseVec::Term> t;
      std::set<int> used;
      for (int k = 0; k < 6; ++k) {
        int i = idx(rng), c = coeff(rng);
        if (c != 0 && used.insert(i).second) t.push_back({i, Scalar::of_int(QQ, c)});
      }
      std::sort(t.begin(), t.end(),
                [](const SparseVec::Term& a, const SparseVec::Term& b) { return a.first < b.first; });
      rows.push_back(SparseVec::of_terms(std::move(t)));
    }
    Subspace dense_path = rref(rows, QQ, 40);  // 40 < 64: dense
    Subspace sparse_path = rref(rows, QQ, 80); // same rows, padded ambient: sparse
    REQUIRE(dense_path.dim() == sparse_path.dim());
    CHECK(dense_path.pivots() == sparse_path.pivots());
    for (int i = 0; i < dense_path.dim(); ++i)
      CHECK(dense_path.rows()[i] == sparse_path.rows()[i]);
    CHECK(dense_path.dim() == oracle_rank(densify(rows, 40)));
  }
}

TEST_CASE("kernel: rank plus nullity, annihilation, canonical order") {
  std::vector<SparseVec> rows = {vec({{0, 1}, {1, -1}}), vec({{1, 1}, {2, -1}})};
  Subspace k = kernel(rows, QQ, 4);
  CHECK(k.dim() == 2);  // rank 2 + nullity 2 = 4
  for (const auto& kv : k.rows())
    for (const auto& row : rows) {
      Scalar dot = Scalar::zero(QQ);
      for (const auto& [i, c] : row.terms()) dot = dot + c * kv.get(i, QQ);
      CHECK(dot.is_zero());
    }
  CHECK(k.contains(vec({{0, 1}, {1, 1}, {2, 1}})));
  CHECK(k.contains(vec({{3, 5}})));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SparseVec> m;
    for (int r = 0; r < 5; ++r) {
      std::vector<SparseVec::Term> t;
      for (int j = 0; j < 9; ++j) {
        int c = coeff(rng);
        if (c != 0) t.push_back({j, Scalar::of_int(QQ, c)});
      }
      m.push_back(SparseVec::of_terms(std::move(t)));
    }
    Subspace null = kernel(m, QQ, 9);
    CHECK(null.dim() == 9 - oracle_rank(densify(m, 9)));
  }
}

TEST_CASE("quotient basis and normal forms") {
  /* Ambient: full 4-space; relations identify e0 with e1+e2 and kill e3. */
  Subspace ambient = Subspace::full(QQ, 4);
  Subspace rel = rref({vec({{0, 1}, {1, -1}, {2, -1}}), vec({{3, 1}})}, QQ, 4);
  QuotientBasis q(ambient, rel);
  CHECK(q.dim() == 2);
  CHECK(q.representatives() == std::vector<int>{1, 2});

  SparseVec v = vec({{0, 2}, {1, 1}, {3, 9}});
  SparseVec nf = q.normal_form(v);
  CHECK(nf == vec({{1, 3}, {2, 2}}));
  CHECK(q.normal_form(nf) == nf);          // projection
  CHECK(rel.contains(v - nf));             // v and nf in the same coset
  CHECK(q.normal_form(vec({{3, 4}})).is_zero());

  /* Relations not inside the ambient space are rejected. */
  Subspace small = rref({vec({{0, 1}}), vec({{1, 1}})}, QQ, 4);
  Subspace bad_rel = rref({vec({{2, 1}})}, QQ, 4);
  CHECK_THROWS_AS(QuotientBasis(small, bad_rel), NotSubspace);
}

TEST_CASE("quotient against a proper ambient subspace") {
  /* Ambient spanned by e0+e3 and e1; relation identifies them. */
  Subspace ambient = rref({vec({{0, 1}, {3, 1}}), vec({{1, 1}})}, QQ, 4);
  Subspace rel = rref({vec({{0, 1}, {1, -1}, {3, 1}})}, QQ, 4);
  QuotientBasis q(ambient, rel);
  CHECK(q.dim() == 1);
  SparseVec nf = q.normal_form(vec({{0, 1}, {3, 1}}));
  CHECK(nf == vec({{1, 1}}));
}

TEST_CASE("prime field elimination") {
  Field f3 = Field::prime(3);
  auto fv = [&](std::vector<std::pair<int, long long>> terms) {
    std::vector<SparseVec::Term> t;
    for (auto& [i, c] : terms)
      if (c % 3 != 0) t.push_back({i, Scalar::of_int(f3, c)});
    return SparseVec::of_terms(std::move(t));
  };
  /* Rows dependent mod 3 but not over the rationals. */
  Subspace s = rref({fv({{0, 1}, {1, 2}}), fv({{0, 2}, {1, 1}})}, f3, 2);
  CHECK(s.dim() == 1);
  CHECK(s.rows()[0] == fv({{0, 1}, {1, 2}}));
}
