#include "suspla/milnor_moore.hpp"

#include <algorithm>
#include <random>

namespace suspla {

SparseVec BialgebraMorphism::apply_basis(int idx) const {
  auto it = images.find(idx);
  return it == images.end() ? SparseVec() : it->second;
}

SparseVec BialgebraMorphism::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) out.axpy(c, apply_basis(i));
  return out;
}

Tensor2 BialgebraMorphism::apply_tensor(const Tensor2& t) const {
  Tensor2 out;
  for (const auto& [ab, c] : t.terms())
    out.axpy(c, Tensor2::outer(apply_basis(ab.first), apply_basis(ab.second)));
  return out;
}

BialgebraMorphism identity_morphism(const PresentedBialgebra& A) {
  BialgebraMorphism f;
  f.domain = &A;
  f.codomain = &A;
  const Scalar one = Scalar::one(A.field());
  for (int i = 0; i < A.dim(); ++i) f.images[i] = SparseVec::unit(i, one);
  return f;
}

BialgebraMorphism compose(const BialgebraMorphism& g, const BialgebraMorphism& f) {
  if (f.codomain != g.domain) throw SchemaError("bialgebra morphism composition mismatch");
  BialgebraMorphism h;
  h.domain = f.domain;
  h.codomain = g.codomain;
  for (const auto& [i, img] : f.images) {
    SparseVec out = g.apply(img);
    if (!out.is_zero()) h.images[i] = std::move(out);
  }
  return h;
}

Verdict check_bialgebra_morphism(const BialgebraMorphism& f, const RigidStructure& dom_rigid,
                                 const RigidStructure& cod_rigid) {
  if (!f.domain || !f.codomain) throw SchemaError("morphism with unset endpoints");
  const PresentedBialgebra& A = *f.domain;
  const PresentedBialgebra& B = *f.codomain;
  if (A.field() != B.field()) throw KindMismatch("morphism across different ground fields");
  if (A.graded() != B.graded())
    throw SchemaError("morphism between graded and ungraded bialgebras");
  if (A.graded() && !(A.monoid() == B.monoid()))
    throw SchemaError("morphism across different degree monoids");

  Verdict v = Verdict::pass();
  if (!(f.apply(A.unit()) == B.unit())) v &= Verdict::fail("morphism does not preserve the unit");

  for (int i = 0; i < A.dim(); ++i) {
    const SparseVec fi = f.apply_basis(i);
    if (!(B.counit(fi) == A.counit_basis(i)))
      v &= Verdict::fail("morphism does not preserve the counit at " + A.name(i));
    if (A.graded()) {
      const int d = *A.degree_of(i);
      for (const auto& [j, c] : fi.terms()) {
        (void)c;
        if (*B.degree_of(j) != d) {
          v &= Verdict::fail("image of " + A.name(i) + " is not homogeneous of its degree");
          break;
        }
      }
    }
    const Tensor2 lhs = B.comult(fi);
    const Tensor2 rhs = f.apply_tensor(A.comult_basis(i));
    if (!(lhs == rhs))
      v &= Verdict::fail("morphism does not commute with comultiplication at " + A.name(i));
  }

  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      auto p = A.try_mult_basis(i, j);
      if (!p) continue;
      auto q = B.try_mult(f.apply_basis(i), f.apply_basis(j));
      if (!q) {
        v &= Verdict::indeterminate("image of " + A.name(i) + " * " + A.name(j) +
                                    " left the truncation");
        continue;
      }
      if (!(f.apply(*p) == *q))
        v &= Verdict::fail("morphism is not multiplicative on " + A.name(i) + ", " + A.name(j));
    }

  for (const auto& [g, vg] : dom_rigid.eta) {
    if (!cod_rigid.has(g)) {
      v &= Verdict::fail("codomain has no distinguished grouplike at " +
                         dom_rigid.monoid.name(g));
      continue;
    }
    if (!(f.apply(vg) == cod_rigid.eta_of(g)))
      v &= Verdict::fail("morphism moves the distinguished grouplike at " +
                         dom_rigid.monoid.name(g));
  }
  return v;
}

std::map<int, BlockProfile> block_profile(const BialgebraMorphism& f,
                                          const DegreeWindow& window) {
  if (!f.domain || !f.codomain) throw SchemaError("morphism with unset endpoints");
  const PresentedBialgebra& A = *f.domain;
  const PresentedBialgebra& B = *f.codomain;
  std::map<int, BlockProfile> out;
  for (int d : window.elements()) {
    BlockProfile p;
    const std::vector<int> dom = A.block(d);
    const std::vector<int> cod = B.block(d);
    p.domain_dim = static_cast<int>(dom.size());
    p.codomain_dim = static_cast<int>(cod.size());
    std::vector<SparseVec> rows;
    for (int i : dom) rows.push_back(f.apply_basis(i));
    p.rank = rref(rows, A.field(), B.dim()).dim();
    out[d] = p;
  }
  return out;
}

bool is_injective(const BialgebraMorphism& f, const DegreeWindow& window) {
  const std::map<int, BlockProfile> prof = block_profile(f, window);
  for (const auto& [d, p] : prof) {
    (void)d;
    if (!p.injective()) return false;
  }
  return true;
}

bool is_surjective(const BialgebraMorphism& f, const DegreeWindow& window) {
  const std::map<int, BlockProfile> prof = block_profile(f, window);
  for (const auto& [d, p] : prof) {
    (void)d;
    if (!p.surjective()) return false;
  }
  return true;
}

SparseVec PrimitiveChart::to_ambient(const SparseVec& lie_coords) const {
  SparseVec out;
  for (const auto& [i, c] : lie_coords.terms()) {
    if (i < 0 || i >= static_cast<int>(ambient_of.size()))
      throw SchemaError("coordinate outside the primitive basis");
    out.axpy(c, ambient_of[i]);
  }
  return out;
}

SparseVec PrimitiveChart::from_ambient(int degree, const SparseVec& v) const {
  if (v.is_zero()) return v;
  auto it = space.find(degree);
  if (it == space.end()) throw NotSubspace("no primitives recorded in this degree");
  auto c = it->second.coordinates(v);
  if (!c) throw NotSubspace("element is not a generalized primitive of its degree");
  const int base = offset.at(degree);
  std::vector<SparseVec::Term> terms;
  for (const auto& [r, coeff] : c->terms()) terms.push_back({base + r, coeff});
  return SparseVec::of_terms(std::move(terms));
}

PrimitiveChart primitive_chart(const PresentedBialgebra& A, const RigidStructure& rigid,
                               const DegreeWindow& window) {
  PrimitiveChart chart;
  chart.lie = std::make_shared<SuspensiveLie>(gp_lie(A, rigid, window));
  for (int Q : window.elements()) {
    Subspace s = gp_basis(A, rigid, Q);
    chart.offset[Q] = static_cast<int>(chart.ambient_of.size());
    const std::vector<SparseVec> rows = s.rows();
    for (const SparseVec& r : rows) chart.ambient_of.push_back(r);
    chart.space.emplace(Q, std::move(s));
  }
  if (static_cast<int>(chart.ambient_of.size()) != chart.lie->dim())
    throw SchemaError("primitive chart out of step with the primitive Lie algebra");
  return chart;
}

bool UnitMapReport::iso() const {
  for (const auto& [d, p] : profile) {
    (void)d;
    if (!p.injective() || !p.surjective()) return false;
  }
  return true;
}

UnitMapReport unit_map(const SuspensiveLie& L, const TruncatedEnvelope& env) {
  if (L.dim() != env.source.dim())
    throw SchemaError("unit map asked for a Lie algebra of the wrong shape");
  for (int i = 0; i < L.dim(); ++i)
    if (L.degree_of(i) != env.source.degree_of(i))
      throw SchemaError("unit map asked for a Lie algebra of the wrong shape");

  UnitMapReport rep{primitive_chart(env.algebra, env.rigid, env.window), {}, {}};
  rep.map.domain = &L;
  rep.map.codomain = rep.chart.lie.get();
  for (int i = 0; i < L.dim(); ++i) {
    if (env.inclusion[i].is_zero()) continue;
    SparseVec img = rep.chart.from_ambient(L.degree_of(i), env.inclusion[i]);
    if (!img.is_zero()) rep.map.images[i] = std::move(img);
  }
  for (int d : env.window.elements()) {
    BlockProfile p;
    const std::vector<int> dom = L.block(d);
    p.domain_dim = static_cast<int>(dom.size());
    p.codomain_dim = static_cast<int>(rep.chart.lie->block(d).size());
    std::vector<SparseVec> rows;
    for (int i : dom) rows.push_back(rep.map.apply_basis(i));
    p.rank = rref(rows, L.field(), rep.chart.lie->dim()).dim();
    rep.profile[d] = p;
  }
  return rep;
}

BialgebraMorphism extend_lie_map(const TruncatedEnvelope& env, const SuspensiveMorphism& f,
                                 const PresentedBialgebra& A, const PrimitiveChart& chart,
                                 const RigidStructure& a_rigid) {
  if (!f.domain || f.domain->dim() != env.source.dim())
    throw SchemaError("extension asked for a map off the envelope's source");

  std::vector<SparseVec> amb;
  amb.reserve(env.source.dim());
  for (int i = 0; i < env.source.dim(); ++i)
    amb.push_back(chart.to_ambient(f.apply_basis(i)));

  BialgebraMorphism h;
  h.domain = &env.algebra;
  h.codomain = &A;
  for (int i = 0; i < env.algebra.dim(); ++i) {
    const EnvelopeMonomial& m = env.reps[i];
    SparseVec val = a_rigid.eta_of(m.grouplike);
    for (int letter : m.word) val = A.mult(val, amb[letter]);
    if (!val.is_zero()) h.images[i] = std::move(val);
  }
  return h;
}

SuspensiveMorphism restrict_to_primitives(const TruncatedEnvelope& env,
                                          const BialgebraMorphism& h,
                                          const PrimitiveChart& cod_chart) {
  SuspensiveMorphism f;
  f.domain = &env.source;
  f.codomain = cod_chart.lie.get();
  for (int i = 0; i < env.source.dim(); ++i) {
    if (env.inclusion[i].is_zero()) continue;
    SparseVec img = cod_chart.from_ambient(env.source.degree_of(i),
                                           h.apply(env.inclusion[i]));
    if (!img.is_zero()) f.images[i] = std::move(img);
  }
  return f;
}

CounitMap counit_map(const PresentedBialgebra& A, const RigidStructure& rigid,
                     const DegreeWindow& window, int lie_cap) {
  CounitMap cm{primitive_chart(A, rigid, window), nullptr, {}};
  cm.envelope = std::make_shared<TruncatedEnvelope>(build_w(*cm.chart.lie, window, lie_cap));
  SuspensiveMorphism id;
  id.domain = &cm.envelope->source;
  id.codomain = cm.chart.lie.get();
  const Scalar one = Scalar::one(A.field());
  for (int i = 0; i < cm.chart.lie->dim(); ++i) id.images[i] = SparseVec::unit(i, one);
  cm.map = extend_lie_map(*cm.envelope, id, A, cm.chart, rigid);
  return cm;
}

BialgebraMorphism envelope_functor(const TruncatedEnvelope& dom_env,
                                   const TruncatedEnvelope& cod_env,
                                   const SuspensiveMorphism& f) {
  UnitMapReport um = unit_map(cod_env.source, cod_env);
  SuspensiveMorphism g;
  g.domain = &dom_env.source;
  g.codomain = um.chart.lie.get();
  for (int i = 0; i < dom_env.source.dim(); ++i) {
    SparseVec img = um.map.apply(f.apply_basis(i));
    if (!img.is_zero()) g.images[i] = std::move(img);
  }
  return extend_lie_map(dom_env, g, cod_env.algebra, um.chart, cod_env.rigid);
}

BialgebraMorphism quotient_morphism(const TruncatedEnvelope& w, const TruncatedEnvelope& z) {
  if (static_cast<int>(z.quotient_of.size()) != w.algebra.dim())
    throw SchemaError("quotient data does not cover the envelope");
  BialgebraMorphism h;
  h.domain = &w.algebra;
  h.codomain = &z.algebra;
  for (int i = 0; i < w.algebra.dim(); ++i)
    if (!z.quotient_of[i].is_zero()) h.images[i] = z.quotient_of[i];
  return h;
}

namespace {

void fold(MMReport& rep, const Verdict& v, const std::string& label) {
  if (v.status == Status::Pass) return;
  if (v.status == Status::Fail)
    rep.verdict = Status::Fail;
  else if (rep.verdict == Status::Pass)
    rep.verdict = Status::Indeterminate;
  if (v.witnesses.empty())
    rep.witnesses.push_back(label);
  else
    for (const auto& w : v.witnesses) rep.witnesses.push_back(label + ": " + w);
}

void fail(MMReport& rep, const std::string& msg) {
  rep.verdict = Status::Fail;
  rep.witnesses.push_back(msg);
}

}  // namespace

MMReport verify_mm_torsion_free(const SuspensiveLie& L, const DegreeWindow& window,
                                int lie_cap) {
  MMReport rep;
  const Monoid& G = window.monoid();
  if (!L.field().char_zero()) {
    fail(rep, "ground field has positive characteristic");
    return rep;
  }
  if (!G.is_group()) {
    const TorsionFlags tf = torsion_flags(L, window, /*skip_unverifiable=*/true);
    if (!tf.torsion_free) {
      for (const auto& n : tf.notes)
        if (n.find("torsion element") != std::string::npos) rep.witnesses.push_back(n);
      if (rep.witnesses.empty()) rep.witnesses.push_back("the action has torsion");
      rep.verdict = Status::Fail;
      return rep;
    }
  }

  try {
    const TruncatedEnvelope W = build_w(L, window, lie_cap);
    const UnitMapReport um = unit_map(L, W);
    for (const auto& [d, p] : um.profile) {
      auto& dims = rep.per_degree_dims[d];
      dims["lie"] = p.domain_dim;
      dims["primitives"] = p.codomain_dim;
      dims["envelope"] = static_cast<int>(W.algebra.block(d).size());
      if (!p.injective() || !p.surjective())
        fail(rep, "canonical map into the primitives is not an isomorphism in degree " +
                      G.name(d));
    }

    const CounitMap cm = counit_map(W.algebra, W.rigid, window, lie_cap);
    fold(rep, check_bialgebra_morphism(cm.map, cm.envelope->rigid, W.rigid),
         "evaluation morphism");
    const std::map<int, BlockProfile> prof = block_profile(cm.map, window);
    for (const auto& [d, p] : prof) {
      rep.per_degree_dims[d]["envelope_of_primitives"] = p.domain_dim;
      if (!p.injective() || !p.surjective())
        fail(rep, "evaluation of the primitives' envelope is not an isomorphism in degree " +
                      G.name(d));
    }
  } catch (const OverflowError& e) {
    if (rep.verdict == Status::Pass) rep.verdict = Status::Indeterminate;
    rep.witnesses.push_back(e.what());
  } catch (const WindowTooSmall& e) {
    if (rep.verdict == Status::Pass) rep.verdict = Status::Indeterminate;
    rep.witnesses.push_back(e.what());
  }
  return rep;
}

MMReport verify_mm_left_sided(const SuspensiveLie& L, const DegreeWindow& window, int lie_cap) {
  const Monoid& G = window.monoid();
  if (!G.is_linear())
    throw NonLinearMonoid("degree divisibility is not a total order");
  MMReport rep;
  if (!L.field().char_zero()) {
    fail(rep, "ground field has positive characteristic");
    return rep;
  }
  const TorsionFlags tf = torsion_flags(L, window, /*skip_unverifiable=*/true);
  if (!tf.torsion)
    throw NonTorsionInput(tf.notes.empty() ? "the action does not vanish" : tf.notes.front());

  try {
    const TruncatedEnvelope Z = build_z(L, window, lie_cap);
    fold(rep, is_left_sided(Z.algebra, Z.rigid, window), "left-sidedness");
    fold(rep, is_gpg(Z.algebra, Z.rigid, window), "generation");
    const UnitMapReport um = unit_map(L, Z);
    for (const auto& [d, p] : um.profile) {
      auto& dims = rep.per_degree_dims[d];
      dims["lie"] = p.domain_dim;
      dims["primitives"] = p.codomain_dim;
      dims["quotient"] = static_cast<int>(Z.algebra.block(d).size());
      if (!p.injective() || !p.surjective())
        fail(rep, "primitives of the quotient do not match the input in degree " + G.name(d));
    }
  } catch (const OverflowError& e) {
    if (rep.verdict == Status::Pass) rep.verdict = Status::Indeterminate;
    rep.witnesses.push_back(e.what());
  } catch (const WindowTooSmall& e) {
    if (rep.verdict == Status::Pass) rep.verdict = Status::Indeterminate;
    rep.witnesses.push_back(e.what());
  }
  return rep;
}

InjectivityReport check_gp_injectivity_criterion(const BialgebraMorphism& f,
                                                 const RigidStructure& dom_rigid,
                                                 const RigidStructure& cod_rigid,
                                                 const DegreeWindow& window) {
  if (!f.domain || !f.codomain) throw SchemaError("morphism with unset endpoints");
  InjectivityReport rep;
  const Verdict gen = is_gpg(*f.domain, dom_rigid, window);
  if (gen.status != Status::Pass) {
    rep.verdict = gen.status;
    rep.witnesses.push_back("domain is not generated by grouplikes and primitives");
    for (const auto& w : gen.witnesses) rep.witnesses.push_back(w);
    return rep;
  }

  rep.map_injective = is_injective(f, window);
  rep.gp_injective = true;
  for (int Q : window.elements()) {
    const Subspace s = gp_basis(*f.domain, dom_rigid, Q);
    const std::vector<SparseVec> rows = s.rows();
    std::vector<SparseVec> images;
    for (const SparseVec& r : rows) images.push_back(f.apply(r));
    if (rref(images, f.domain->field(), f.codomain->dim()).dim() !=
        static_cast<int>(rows.size())) {
      rep.gp_injective = false;
      rep.witnesses.push_back("a primitive of degree " + window.monoid().name(Q) +
                              " dies under the morphism");
    }
  }
  (void)cod_rigid;
  if (rep.map_injective != rep.gp_injective) {
    rep.verdict = Status::Fail;
    rep.witnesses.push_back("injectivity on primitives disagrees with injectivity");
  }
  return rep;
}

SuspensiveLie random_suspensive_lie(Field k, const DegreeWindow& window, std::uint64_t seed,
                                    bool torsion) {
  const Monoid& G = window.monoid();
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  for (int attempt = 0; attempt < 32; ++attempt) {
    const int ngen = pick(1, 2);
    const int ncen = pick(0, 1);
    const int nfam = ngen + ncen;

    /* Letter degrees.  A nonzero action needs every window degree populated,
     * or composing through a missing block would break associativity; a zero
     * action admits any sampled set of non-identity degrees. */
    std::vector<int> degrees;
    for (int d : window.elements()) {
      if (torsion) {
        if (d != G.identity() && pick(0, 1) == 1) degrees.push_back(d);
      } else {
        degrees.push_back(d);
      }
    }
    if (degrees.empty() && window.elements().size() > 1) degrees.push_back(window.elements()[1]);

    std::vector<BasisElement> basis;
    std::map<std::pair<int, int>, int> letter;  // (degree, family) -> index
    for (int fam = 0; fam < nfam; ++fam)
      for (int d : degrees) {
        letter[{d, fam}] = static_cast<int>(basis.size());
        basis.push_back({"r" + std::to_string(fam) + "_" + G.name(d), d});
      }

    SuspensiveLie L(k, G, basis);

    if (!torsion) {
      if (G.kind() == Monoid::Kind::FreeRank1) {
        for (const auto& [key, idx] : letter) {
          auto it = letter.find({key.first + 1, key.second});
          if (it != letter.end())
            L.set_action(1, idx, SparseVec::unit(it->second, Scalar::one(k)));
        }
      } else {
        for (int g = 0; g < G.size(); ++g) {
          if (g == G.identity()) continue;
          for (const auto& [key, idx] : letter) {
            auto it = letter.find({G.mul(g, key.first), key.second});
            if (it != letter.end())
              L.set_action(g, idx, SparseVec::unit(it->second, Scalar::one(k)));
          }
        }
      }
    }

    if (ngen >= 2 && ncen >= 1) {
      /* One uniform coefficient keeps the bracket equivariant; with a zero
       * action the coefficient may vary per degree pair. */
      const int uniform = pick(-2, 2);
      for (int d : degrees)
        for (int e : degrees) {
          auto target = window.mul(d, e);
          if (!target) continue;
          auto tlet = letter.find({*target, ngen});
          if (tlet == letter.end()) continue;
          const int c = torsion ? pick(-2, 2) : uniform;
          if (c == 0) continue;
          L.set_bracket(letter.at({d, 0}), letter.at({e, 1}),
                        SparseVec::unit(tlet->second, Scalar::of_int(k, c)));
        }
    }

    const bool axioms = check_suspensive(L, window).ok();
    const TorsionFlags tf = torsion_flags(L, window, /*skip_unverifiable=*/true);
    const bool flavor = torsion ? tf.torsion : (G.is_group() || tf.torsion_free);
    if (axioms && flavor) return L;
  }
  throw Error(ExitCode::Failure, "random Lie fixture generation did not converge");
}

SuspensiveMorphism random_lie_morphism(const SuspensiveLie& L, const SuspensiveLie& M,
                                       const DegreeWindow& window, std::uint64_t seed) {
  const std::vector<SuspensiveMorphism> basis = equivariant_map_space(L, M);
  std::mt19937_64 rng(seed);
  SuspensiveMorphism f;
  f.domain = &L;
  f.codomain = &M;
  if (basis.empty()) return f;

  for (int attempt = 0; attempt < 32; ++attempt) {
    std::map<int, SparseVec> images;
    for (const SuspensiveMorphism& b : basis) {
      const int c = static_cast<int>(rng() % 5) - 2;
      if (c == 0) continue;
      const Scalar sc = Scalar::of_int(L.field(), c);
      for (const auto& [i, img] : b.images) {
        auto it = images.find(i);
        if (it == images.end())
          images.emplace(i, img.scaled(sc));
        else
          it->second.axpy(sc, img);
      }
    }
    for (auto it = images.begin(); it != images.end();)
      it = it->second.is_zero() ? images.erase(it) : std::next(it);
    f.images = std::move(images);
    if (check_suspensive_morphism(f, window).ok()) return f;
  }
  f.images.clear();
  return f;
}

}  // namespace suspla
