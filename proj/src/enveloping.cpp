#include "suspla/enveloping.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace suspla {

namespace {

/* Column order inside one degree block.  Longer words first, then monomials
 * with a non-trivial grouplike part, then lexicographically larger words.
 * RREF pivots prefer early columns, so the surviving cosets are represented
 * by the shortest, most absorbed, sorted monomials, and the representative
 * word length realizes the Lie filtration level. */
struct ColumnOrder {
  int identity;
  bool operator()(const EnvelopeMonomial& a, const EnvelopeMonomial& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
    const int ia = a.grouplike == identity ? 1 : 0;
    const int ib = b.grouplike == identity ? 1 : 0;
    if (ia != ib) return ia < ib;
    if (a.grouplike != b.grouplike) return a.grouplike < b.grouplike;
    return a.word > b.word;
  }
};

struct BlockBuild {
  std::vector<EnvelopeMonomial> columns;
  std::map<EnvelopeMonomial, int> index;
  std::vector<Subspace> relations;    // exactly one entry once built
  std::vector<int> column_global;     // global basis index per column, -1 for pivots
};

void acc_term(std::map<int, Scalar>& m, int k, const Scalar& c) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (!c.is_zero()) m.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

SparseVec vec_of(const std::map<int, Scalar>& m) {
  std::vector<SparseVec::Term> terms(m.begin(), m.end());
  return SparseVec::of_terms(std::move(terms));
}

/* All words over the basis of L, up to the length cap, whose running degree
 * product stays inside the window.  The window is divisor-closed, so any
 * word contributing to an in-window block appears here. */
std::vector<std::pair<std::vector<int>, int>> enumerate_words(const SuspensiveLie& L,
                                                              const DegreeWindow& window,
                                                              int cap) {
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<int> word;
  std::function<void(int)> rec = [&](int degree) {
    out.push_back({word, degree});
    if (static_cast<int>(word.size()) == cap) return;
    for (int li = 0; li < L.dim(); ++li) {
      auto d2 = window.mul(degree, L.degree_of(li));
      if (!d2) continue;
      word.push_back(li);
      rec(*d2);
      word.pop_back();
    }
  };
  rec(window.monoid().identity());
  return out;
}

/* Factorizations g = h * g2 with h not the identity, both factors inside the
 * window.  The free monoid only needs single generator steps; chains of
 * those span every longer absorption. */
std::vector<std::pair<int, int>> factorizations(const Monoid& G, const DegreeWindow& window,
                                                int g) {
  std::vector<std::pair<int, int>> out;
  if (G.kind() == Monoid::Kind::FreeRank1) {
    if (g >= 1) out.push_back({1, g - 1});
    return out;
  }
  for (int h : window.elements()) {
    if (h == G.identity()) continue;
    for (int g2 : window.elements())
      if (G.mul(h, g2) == g) out.push_back({h, g2});
  }
  return out;
}

std::string monomial_name(const Monoid& G, const SuspensiveLie& L, const EnvelopeMonomial& m) {
  if (m.word.empty()) return G.name(m.grouplike);
  std::string s;
  if (m.grouplike != G.identity()) s = G.name(m.grouplike);
  for (int li : m.word) {
    if (!s.empty()) s += "*";
    s += L.basis()[li].name;
  }
  return s;
}

/* Grouplike multiplication as the monoid action and the commutator as the
 * bracket, declared only where the products stay inside the truncation. */
void fill_commutator_lie(TruncatedEnvelope& env) {
  const Field& field = env.algebra.field();
  const Monoid& G = env.window.monoid();
  std::vector<BasisElement> basis;
  for (int i = 0; i < env.algebra.dim(); ++i)
    basis.push_back({env.algebra.name(i), *env.algebra.degree_of(i)});
  auto lie = std::make_shared<SuspensiveLie>(field, G, std::move(basis));

  std::vector<int> gens;
  if (G.kind() == Monoid::Kind::FreeRank1) {
    gens.push_back(1);
  } else {
    for (int h : env.window.elements())
      if (h != G.identity()) gens.push_back(h);
  }
  const Scalar one = Scalar::one(field);
  for (int h : gens) {
    if (!env.rigid.has(h)) continue;
    const SparseVec& eta = env.rigid.eta_of(h);
    for (int i = 0; i < env.algebra.dim(); ++i) {
      auto p = env.algebra.try_mult(eta, SparseVec::unit(i, one));
      if (p && !p->is_zero()) lie->set_action(h, i, *p);
    }
  }
  for (int i = 0; i < env.algebra.dim(); ++i)
    for (int j = i + 1; j < env.algebra.dim(); ++j) {
      auto pij = env.algebra.try_mult_basis(i, j);
      auto pji = env.algebra.try_mult_basis(j, i);
      if (!pij || !pji) continue;
      SparseVec c = *pij - *pji;
      if (!c.is_zero()) lie->set_bracket(i, j, std::move(c));
    }
  env.commutator_lie = std::move(lie);
}

}  // namespace

TruncatedEnvelope build_w(const SuspensiveLie& L, const DegreeWindow& window, int lie_cap) {
  if (lie_cap < 1) throw SchemaError("lie cap must be at least 1");
  {
    Verdict v = check_suspensive(L, window);
    if (!v.ok())
      throw SchemaError("source Lie algebra fails its axioms: " +
                        (v.witnesses.empty() ? std::string("(no witness)") : v.witnesses.front()));
  }
  const Field& field = L.field();
  const Monoid& G = window.monoid();
  const int identity = G.identity();
  const Scalar one = Scalar::one(field);

  /* Spanning monomials per degree block. */
  std::map<int, BlockBuild> blocks;
  for (const auto& [word, s] : enumerate_words(L, window, lie_cap))
    for (int g : window.elements()) {
      auto D = window.mul(g, s);
      if (!D) continue;
      blocks[*D].columns.push_back({g, word});
    }

  const ColumnOrder order{identity};
  for (auto& [D, B] : blocks) {
    (void)D;
    std::sort(B.columns.begin(), B.columns.end(), order);
    for (int c = 0; c < static_cast<int>(B.columns.size()); ++c) B.index.emplace(B.columns[c], c);
  }

  /* Relation rows: straightening at inversions and grouplike absorption. */
  for (auto& [D, B] : blocks) {
    (void)D;
    auto col = [&](const EnvelopeMonomial& m) {
      auto it = B.index.find(m);
      if (it == B.index.end()) throw SchemaError("envelope enumeration missed a monomial");
      return it->second;
    };
    std::vector<SparseVec> rows;
    for (const auto& m : B.columns) {
      const int n = static_cast<int>(m.word.size());
      for (int p = 0; p + 1 < n; ++p) {
        const int a = m.word[p], b = m.word[p + 1];
        if (a <= b) continue;
        std::map<int, Scalar> row;
        acc_term(row, col(m), one);
        EnvelopeMonomial swapped = m;
        std::swap(swapped.word[p], swapped.word[p + 1]);
        acc_term(row, col(swapped), -one);
        const SparseVec bracket = L.bracket_basis(a, b);
        for (const auto& [k, c] : bracket.terms()) {
          EnvelopeMonomial contracted{m.grouplike, {}};
          contracted.word.reserve(n - 1);
          for (int q = 0; q < n; ++q) {
            if (q == p + 1) continue;
            contracted.word.push_back(q == p ? k : m.word[q]);
          }
          acc_term(row, col(contracted), -c);
        }
        rows.push_back(vec_of(row));
      }
      if (m.grouplike != identity && n > 0) {
        for (const auto& [h, g2] : factorizations(G, window, m.grouplike))
          for (int p = 0; p < n; ++p) {
            std::map<int, Scalar> row;
            acc_term(row, col(m), one);
            const SparseVec image = L.act_basis(h, m.word[p]);
            for (const auto& [k, c] : image.terms()) {
              EnvelopeMonomial moved = m;
              moved.grouplike = g2;
              moved.word[p] = k;
              acc_term(row, col(moved), -c);
            }
            rows.push_back(vec_of(row));
          }
      }
    }
    B.relations.push_back(rref(rows, field, static_cast<int>(B.columns.size())));
  }

  /* Global basis: surviving columns, blockwise in window order. */
  std::vector<PresentedBialgebra::Element> elements;
  std::vector<EnvelopeMonomial> reps;
  std::vector<int> levels;
  std::vector<int> gdeg;
  std::set<std::string> used;
  for (int D : window.elements()) {
    BlockBuild& B = blocks.at(D);
    std::set<int> pivot_set(B.relations[0].pivots().begin(), B.relations[0].pivots().end());
    B.column_global.assign(B.columns.size(), -1);
    for (int c = 0; c < static_cast<int>(B.columns.size()); ++c) {
      if (pivot_set.count(c)) continue;
      std::string name = monomial_name(G, L, B.columns[c]);
      while (used.count(name)) name = G.name(identity) + "*" + name;
      used.insert(name);
      B.column_global[c] = static_cast<int>(elements.size());
      elements.push_back({name, D});
      reps.push_back(B.columns[c]);
      levels.push_back(static_cast<int>(B.columns[c].word.size()));
      gdeg.push_back(D);
    }
  }

  PresentedBialgebra alg(field, G, elements);
  TruncatedEnvelope env(L, window, lie_cap, std::move(alg), RigidStructure{G, {}});
  env.reps = std::move(reps);
  env.level = std::move(levels);

  auto normalize = [&](int D, const EnvelopeMonomial& m) {
    const BlockBuild& B = blocks.at(D);
    auto it = B.index.find(m);
    if (it == B.index.end()) throw SchemaError("envelope enumeration missed a monomial");
    const SparseVec r = B.relations[0].reduce(SparseVec::unit(it->second, one));
    std::vector<SparseVec::Term> out;
    for (const auto& [c, coeff] : r.terms()) out.push_back({B.column_global[c], coeff});
    return SparseVec::of_terms(std::move(out));
  };

  env.algebra.set_unit(normalize(identity, {identity, {}}));
  for (int D : window.elements()) env.rigid.eta[D] = normalize(D, {D, {}});
  for (int i = 0; i < env.algebra.dim(); ++i)
    if (env.reps[i].word.empty()) env.algebra.set_counit(i, one);

  for (int li = 0; li < L.dim(); ++li) {
    const int Q = L.degree_of(li);
    if (!window.contains(Q)) {
      env.inclusion.push_back(SparseVec());
      env.notes.push_back("basis element " + L.basis()[li].name + " lies outside the window");
      continue;
    }
    env.inclusion.push_back(normalize(Q, {identity, {li}}));
  }

  for (int i = 0; i < env.algebra.dim(); ++i)
    for (int j = 0; j < env.algebra.dim(); ++j) {
      auto D = window.mul(gdeg[i], gdeg[j]);
      const int len = static_cast<int>(env.reps[i].word.size() + env.reps[j].word.size());
      if (!D || len > lie_cap) {
        env.algebra.set_mult_overflow(i, j);
        continue;
      }
      EnvelopeMonomial prod{G.mul(env.reps[i].grouplike, env.reps[j].grouplike), env.reps[i].word};
      prod.word.insert(prod.word.end(), env.reps[j].word.begin(), env.reps[j].word.end());
      env.algebra.set_mult(i, j, normalize(*D, prod));
    }

  for (int i = 0; i < env.algebra.dim(); ++i) {
    const EnvelopeMonomial& m = env.reps[i];
    const int D = gdeg[i];
    const int n = static_cast<int>(m.word.size());
    Tensor2 acc;
    for (uint32_t U = 0; U < (1u << n); ++U) {
      EnvelopeMonomial lm{m.grouplike, {}}, rm{m.grouplike, {}};
      for (int p = 0; p < n; ++p) {
        if (U & (1u << p)) {
          lm.word.push_back(m.word[p]);
          rm.grouplike = G.mul(rm.grouplike, L.degree_of(m.word[p]));
        } else {
          rm.word.push_back(m.word[p]);
          lm.grouplike = G.mul(lm.grouplike, L.degree_of(m.word[p]));
        }
      }
      acc.axpy(one, Tensor2::outer(normalize(D, lm), normalize(D, rm)));
    }
    env.algebra.set_comult(i, std::move(acc));
  }

  fill_commutator_lie(env);
  return env;
}

TruncatedEnvelope build_w(const SuspensiveLie& L, const DegreeWindow& window) {
  if (L.dim() == 0) return build_w(L, window, 1);
  if (window.monoid().kind() != Monoid::Kind::FreeRank1)
    throw SchemaError("lie cap must be given explicitly for finite degree monoids");
  int max_exp = 0;
  for (int e : window.elements()) max_exp = std::max(max_exp, e);
  int min_letter = std::numeric_limits<int>::max();
  for (int li = 0; li < L.dim(); ++li) {
    const int d = L.degree_of(li);
    if (d == 0)
      throw SchemaError("lie cap must be given explicitly when letters sit in the identity degree");
    min_letter = std::min(min_letter, d);
  }
  return build_w(L, window, std::max(1, max_exp / min_letter));
}

SuspensiveMorphism canonical_inclusion(const TruncatedEnvelope& env) {
  SuspensiveMorphism f;
  f.domain = &env.source;
  f.codomain = env.commutator_lie.get();
  for (int li = 0; li < env.source.dim(); ++li)
    if (!env.inclusion[li].is_zero()) f.images[li] = env.inclusion[li];
  return f;
}

int lie_filtration_level(const TruncatedEnvelope& env, const SparseVec& v) {
  int lvl = 0;
  for (const auto& [i, c] : v.terms()) {
    (void)c;
    if (i < 0 || i >= static_cast<int>(env.level.size()))
      throw SchemaError("vector index outside the envelope basis");
    lvl = std::max(lvl, env.level[i]);
  }
  return lvl;
}

PresentedBialgebra assoc_graded(const TruncatedEnvelope& env) {
  const PresentedBialgebra& A = env.algebra;
  PresentedBialgebra E(A.field(), env.window.monoid(), A.basis());
  E.set_unit(A.unit());
  for (const auto& [i, c] : A.counit_table()) E.set_counit(i, c);
  for (const auto& [ij, v] : A.mult_table()) {
    const int target = env.level[ij.first] + env.level[ij.second];
    std::vector<SparseVec::Term> keep;
    for (const auto& [k, c] : v.terms())
      if (env.level[k] == target) keep.push_back({k, c});
    E.set_mult(ij.first, ij.second, SparseVec::of_terms(std::move(keep)));
  }
  for (const auto& ij : A.overflow_pairs()) E.set_mult_overflow(ij.first, ij.second);
  for (int i = 0; i < A.dim(); ++i) {
    const Tensor2 d = A.comult_basis(i);
    std::vector<Tensor2::Term> keep;
    for (const auto& [ab, c] : d.terms())
      if (env.level[ab.first] + env.level[ab.second] == env.level[i]) keep.push_back({ab, c});
    E.set_comult(i, Tensor2::of_terms(std::move(keep)));
  }
  return E;
}

std::map<std::pair<int, int>, int> bidegree_dims(const TruncatedEnvelope& env) {
  std::map<std::pair<int, int>, int> out;
  for (int i = 0; i < env.algebra.dim(); ++i)
    out[{*env.algebra.degree_of(i), env.level[i]}] += 1;
  return out;
}

std::map<int, int> sym_power_kg(const SuspensiveLie& L, int n, const DegreeWindow& window) {
  if (n < 0) throw SchemaError("symmetric power exponent must be nonnegative");
  const Monoid& G = window.monoid();
  std::map<int, int> dims;
  for (int D : window.elements()) dims[D] = 0;
  if (n == 0) {
    for (int D : window.elements()) dims[D] = 1;
    return dims;
  }

  /* Weakly increasing length-n multiset words with in-window degree. */
  std::vector<std::pair<std::vector<int>, int>> multisets;
  std::vector<int> word;
  std::function<void(int, int)> rec = [&](int start, int degree) {
    if (static_cast<int>(word.size()) == n) {
      multisets.push_back({word, degree});
      return;
    }
    for (int li = start; li < L.dim(); ++li) {
      auto d2 = window.mul(degree, L.degree_of(li));
      if (!d2) continue;
      word.push_back(li);
      rec(li, *d2);
      word.pop_back();
    }
  };
  rec(0, G.identity());

  struct SymBlock {
    std::vector<EnvelopeMonomial> columns;
    std::map<EnvelopeMonomial, int> index;
  };
  std::map<int, SymBlock> blocks;
  for (const auto& [m, s] : multisets)
    for (int g : window.elements()) {
      auto D = window.mul(g, s);
      if (!D) continue;
      SymBlock& B = blocks[*D];
      B.index.emplace(EnvelopeMonomial{g, m}, static_cast<int>(B.columns.size()));
      B.columns.push_back({g, m});
    }

  const Scalar one = Scalar::one(L.field());
  for (auto& [D, B] : blocks) {
    std::vector<SparseVec> rows;
    for (const auto& m : B.columns) {
      if (m.grouplike == G.identity()) continue;
      for (const auto& [h, g2] : factorizations(G, window, m.grouplike))
        for (int p = 0; p < n; ++p) {
          if (p > 0 && m.word[p] == m.word[p - 1]) continue;
          std::map<int, Scalar> row;
          acc_term(row, B.index.at(m), one);
          const SparseVec image = L.act_basis(h, m.word[p]);
          for (const auto& [k, c] : image.terms()) {
            EnvelopeMonomial moved{g2, m.word};
            moved.word[p] = k;
            std::sort(moved.word.begin(), moved.word.end());
            auto it = B.index.find(moved);
            if (it == B.index.end()) throw SchemaError("symmetric power enumeration gap");
            acc_term(row, it->second, -c);
          }
          rows.push_back(vec_of(row));
        }
    }
    const Subspace rel = rref(rows, L.field(), static_cast<int>(B.columns.size()));
    dims[D] = static_cast<int>(B.columns.size()) - rel.dim();
  }
  return dims;
}

TruncatedEnvelope build_z(const SuspensiveLie& L, const DegreeWindow& window, int lie_cap,
                          TruncatedEnvelope* w_out) {
  TruncatedEnvelope W = build_w(L, window, lie_cap);
  const Field& field = W.algebra.field();
  const Monoid& G = window.monoid();
  const Scalar one = Scalar::one(field);
  const int dim = W.algebra.dim();

  std::vector<std::string> notes;
  {
    TorsionFlags tf = torsion_flags(L, window, /*skip_unverifiable=*/true);
    if (!tf.torsion)
      notes.push_back("non-torsion input: " +
                      (tf.notes.empty() ? std::string("some degree acts nontrivially")
                                        : tf.notes.front()));
  }

  std::map<int, std::vector<SparseVec>> gp;
  for (int Q : window.elements()) {
    const Subspace s = gp_basis(W.algebra, W.rigid, Q);
    gp[Q] = s.rows();
  }

  /* Ideal generators: products of generalized primitives in comparable
   * degrees, and grouplike multiples of same-degree primitives. */
  std::map<int, std::vector<SparseVec>> gens;
  for (int Q1 : window.elements())
    for (int Q2 : window.elements()) {
      if (!G.divides(Q1, Q2)) continue;
      auto D = window.mul(Q1, Q2);
      if (!D) continue;
      for (const SparseVec& v1 : gp[Q1])
        for (const SparseVec& v2 : gp[Q2]) {
          auto p = W.algebra.try_mult(v1, v2);
          if (!p)
            throw OverflowError("ideal generator in degree " + G.name(*D) +
                                " leaves the truncation");
          if (!p->is_zero()) gens[*D].push_back(*p);
        }
    }
  for (int Q : window.elements()) {
    auto D = window.mul(Q, Q);
    if (!D) continue;
    for (const SparseVec& v : gp[Q]) {
      auto p = W.algebra.try_mult(W.rigid.eta_of(Q), v);
      if (!p)
        throw OverflowError("ideal generator in degree " + G.name(*D) +
                            " leaves the truncation");
      if (!p->is_zero()) gens[*D].push_back(*p);
    }
  }

  std::map<int, Subspace> ideal;
  for (const auto& [D, vs] : gens) {
    Subspace s = rref(vs, field, dim);
    if (s.dim() > 0) ideal.emplace(D, std::move(s));
  }

  /* Saturate to a two-sided ideal inside the truncation. */
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degs;
    for (const auto& [D, s] : ideal) {
      (void)s;
      degs.push_back(D);
    }
    for (int D : degs) {
      const std::vector<SparseVec> rows = ideal.at(D).rows();
      for (const SparseVec& r : rows)
        for (int b = 0; b < dim; ++b) {
          auto D2 = window.mul(*W.algebra.degree_of(b), D);
          if (!D2) continue;
          const SparseVec eb = SparseVec::unit(b, one);
          for (const auto& p : {W.algebra.try_mult(eb, r), W.algebra.try_mult(r, eb)}) {
            if (!p || p->is_zero()) continue;
            auto it = ideal.find(*D2);
            if (it == ideal.end()) it = ideal.emplace(*D2, Subspace(field, dim)).first;
            if (!it->second.contains(*p)) {
              std::vector<SparseVec> next = it->second.rows();
              next.push_back(*p);
              it->second = rref(next, field, dim);
              changed = true;
            }
          }
        }
    }
  }

  /* The quotient only presents a bialgebra if the ideal is a bi-ideal; verify
   * that inside the truncation before using it. */
  for (const auto& [D, s] : ideal) {
    const std::vector<int> block = W.algebra.block(D);
    std::vector<SparseVec> span_rows;
    for (const SparseVec& r : s.rows()) {
      if (!W.algebra.counit(r).is_zero())
        throw Error(ExitCode::Failure, "envelope ideal is not a coideal: counit does not vanish");
      for (int e : block) {
        const SparseVec ue = SparseVec::unit(e, one);
        for (const Tensor2& t : {Tensor2::outer(r, ue), Tensor2::outer(ue, r)}) {
          std::vector<SparseVec::Term> flat;
          for (const auto& [ab, c] : t.terms()) flat.push_back({ab.first * dim + ab.second, c});
          span_rows.push_back(SparseVec::of_terms(std::move(flat)));
        }
      }
    }
    const Subspace span2 = rref(span_rows, field, dim * dim);
    for (const SparseVec& r : s.rows()) {
      const Tensor2 dr = W.algebra.comult(r);
      std::vector<SparseVec::Term> flat;
      for (const auto& [ab, c] : dr.terms()) flat.push_back({ab.first * dim + ab.second, c});
      if (!span2.contains(SparseVec::of_terms(std::move(flat))))
        throw OverflowError("induced coproduct of the envelope quotient in degree " + G.name(D) +
                            " is not determined within the truncation");
    }
  }

  /* Surviving basis: block members that are not ideal pivots. */
  std::vector<int> w_to_z(dim, -1);
  std::vector<PresentedBialgebra::Element> elements;
  std::vector<EnvelopeMonomial> reps;
  std::vector<int> levels;
  std::vector<int> zdeg;
  std::vector<int> zrep_w;
  for (int D : window.elements()) {
    std::set<int> pivots;
    auto it = ideal.find(D);
    if (it != ideal.end()) pivots.insert(it->second.pivots().begin(), it->second.pivots().end());
    for (int w : W.algebra.block(D)) {
      if (pivots.count(w)) continue;
      w_to_z[w] = static_cast<int>(elements.size());
      elements.push_back({W.algebra.name(w), D});
      reps.push_back(W.reps[w]);
      levels.push_back(W.level[w]);
      zdeg.push_back(D);
      zrep_w.push_back(w);
    }
  }

  auto zimage = [&](const SparseVec& v, int D) {
    auto it = ideal.find(D);
    const SparseVec r = it == ideal.end() ? v : it->second.reduce(v);
    std::vector<SparseVec::Term> out;
    for (const auto& [w, c] : r.terms()) out.push_back({w_to_z[w], c});
    return SparseVec::of_terms(std::move(out));
  };

  PresentedBialgebra alg(field, G, elements);
  TruncatedEnvelope env(L, window, lie_cap, std::move(alg), RigidStructure{G, {}});
  env.reps = std::move(reps);
  env.level = std::move(levels);
  env.notes = std::move(notes);

  env.quotient_of.reserve(dim);
  for (int w = 0; w < dim; ++w)
    env.quotient_of.push_back(zimage(SparseVec::unit(w, one), *W.algebra.degree_of(w)));

  env.algebra.set_unit(env.quotient_of[W.algebra.unit().leading_index()]);
  for (int D : window.elements()) env.rigid.eta[D] = zimage(W.rigid.eta_of(D), D);
  for (int zi = 0; zi < env.algebra.dim(); ++zi) {
    const Scalar c = W.algebra.counit_basis(zrep_w[zi]);
    if (!c.is_zero()) env.algebra.set_counit(zi, c);
  }
  for (int li = 0; li < L.dim(); ++li)
    env.inclusion.push_back(W.inclusion[li].is_zero()
                                ? SparseVec()
                                : zimage(W.inclusion[li], L.degree_of(li)));

  for (int zi = 0; zi < env.algebra.dim(); ++zi)
    for (int zj = 0; zj < env.algebra.dim(); ++zj) {
      auto D = window.mul(zdeg[zi], zdeg[zj]);
      if (!D) {
        env.algebra.set_mult_overflow(zi, zj);
        continue;
      }
      auto p = W.algebra.try_mult_basis(zrep_w[zi], zrep_w[zj]);
      if (!p) {
        env.algebra.set_mult_overflow(zi, zj);
        continue;
      }
      env.algebra.set_mult(zi, zj, zimage(*p, *D));
    }

  for (int zi = 0; zi < env.algebra.dim(); ++zi) {
    const Tensor2 dw = W.algebra.comult_basis(zrep_w[zi]);
    Tensor2 acc;
    for (const auto& [ab, c] : dw.terms())
      acc.axpy(c, Tensor2::outer(env.quotient_of[ab.first], env.quotient_of[ab.second]));
    env.algebra.set_comult(zi, std::move(acc));
  }

  fill_commutator_lie(env);
  if (w_out) *w_out = std::move(W);
  return env;
}

}  // namespace suspla
