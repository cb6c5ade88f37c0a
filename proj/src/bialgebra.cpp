#include "suspla/bialgebra.hpp"

#include <algorithm>
#include <array>

namespace suspla {

Tensor2 Tensor2::of_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Tensor2 out;
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second = out.terms_.back().second + t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Tensor2 Tensor2::pure(int i, int j, Scalar c) {
  Tensor2 out;
  if (!c.is_zero()) out.terms_.push_back({{i, j}, std::move(c)});
  return out;
}

Tensor2 Tensor2::outer(const SparseVec& a, const SparseVec& b) {
  std::vector<Term> terms;
  for (const auto& [i, c] : a.terms())
    for (const auto& [j, d] : b.terms()) terms.push_back({{i, j}, c * d});
  return of_terms(std::move(terms));
}

void Tensor2::axpy(const Scalar& c, const Tensor2& o) {
  if (c.is_zero() || o.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back({o.terms_[j].first, c * o.terms_[j].second});
      ++j;
    } else {
      Scalar s = terms_[i].second + c * o.terms_[j].second;
      if (!s.is_zero()) merged.push_back({terms_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(merged);
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  Tensor2 out = *this;
  if (!o.is_zero()) out.axpy(Scalar::one(o.terms_.front().second.field()), o);
  return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  Tensor2 out = *this;
  if (!o.is_zero()) out.axpy(-Scalar::one(o.terms_.front().second.field()), o);
  return out;
}

Tensor2 Tensor2::scaled(const Scalar& c) const {
  Tensor2 out;
  if (c.is_zero()) return out;
  for (const auto& t : terms_) out.terms_.push_back({t.first, c * t.second});
  return out;
}

Tensor2 Tensor2::swapped() const {
  std::vector<Term> terms;
  for (const auto& [ij, c] : terms_) terms.push_back({{ij.second, ij.first}, c});
  return of_terms(std::move(terms));
}

PresentedBialgebra::PresentedBialgebra(Field field, std::vector<std::string> names)
    : field_(field) {
  for (auto& n : names) basis_.push_back({std::move(n), std::nullopt});
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (b.name.empty() || !seen.insert(b.name).second)
      throw SchemaError("basis names must be nonempty and distinct");
}

PresentedBialgebra::PresentedBialgebra(Field field, Monoid monoid, std::vector<Element> basis)
    : field_(field), monoid_(std::move(monoid)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.name.empty() || !seen.insert(b.name).second)
      throw SchemaError("basis names must be nonempty and distinct");
    if (!b.degree) throw SchemaError("graded bialgebra basis element without a degree");
    monoid_->name(*b.degree);  // range check
  }
}

const Monoid& PresentedBialgebra::monoid() const {
  if (!monoid_) throw SchemaError("bialgebra carries no degree monoid");
  return *monoid_;
}

int PresentedBialgebra::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> PresentedBialgebra::block(int degree) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (!graded() || *basis_[i].degree == degree) out.push_back(i);
  return out;
}

void PresentedBialgebra::check_index(int idx) const {
  if (idx < 0 || idx >= dim()) throw SchemaError("basis index out of range");
}

void PresentedBialgebra::set_counit(int idx, Scalar value) {
  check_index(idx);
  if (value.is_zero())
    counit_.erase(idx);
  else
    counit_.insert_or_assign(idx, std::move(value));
}

void PresentedBialgebra::set_mult(int i, int j, SparseVec value) {
  check_index(i);
  check_index(j);
  overflow_.erase({i, j});
  if (value.is_zero())
    mult_.erase({i, j});
  else
    mult_[{i, j}] = std::move(value);
}

void PresentedBialgebra::set_mult_overflow(int i, int j) {
  check_index(i);
  check_index(j);
  mult_.erase({i, j});
  overflow_.insert({i, j});
}

void PresentedBialgebra::set_comult(int idx, Tensor2 value) {
  check_index(idx);
  if (value.is_zero())
    comult_.erase(idx);
  else
    comult_[idx] = std::move(value);
}

Scalar PresentedBialgebra::counit_basis(int idx) const {
  check_index(idx);
  auto it = counit_.find(idx);
  return it == counit_.end() ? Scalar::zero(field_) : it->second;
}

Scalar PresentedBialgebra::counit(const SparseVec& v) const {
  Scalar out = Scalar::zero(field_);
  for (const auto& [i, c] : v.terms()) out = out + c * counit_basis(i);
  return out;
}

Tensor2 PresentedBialgebra::comult_basis(int idx) const {
  check_index(idx);
  auto it = comult_.find(idx);
  return it == comult_.end() ? Tensor2() : it->second;
}

Tensor2 PresentedBialgebra::comult(const SparseVec& v) const {
  Tensor2 out;
  for (const auto& [i, c] : v.terms()) out.axpy(c, comult_basis(i));
  return out;
}

std::optional<SparseVec> PresentedBialgebra::try_mult_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  if (overflow_.count({i, j})) return std::nullopt;
  auto it = mult_.find({i, j});
  return it == mult_.end() ? SparseVec() : it->second;
}

SparseVec PresentedBialgebra::mult_basis(int i, int j) const {
  auto p = try_mult_basis(i, j);
  if (!p) throw OverflowError("product " + name(i) + " * " + name(j) + " left the truncation");
  return *p;
}

std::optional<SparseVec> PresentedBialgebra::try_mult(const SparseVec& x,
                                                      const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) {
      auto p = try_mult_basis(i, j);
      if (!p) return std::nullopt;
      out.axpy(a * b, *p);
    }
  return out;
}

SparseVec PresentedBialgebra::mult(const SparseVec& x, const SparseVec& y) const {
  auto p = try_mult(x, y);
  if (!p) throw OverflowError("product left the truncation");
  return *p;
}

std::optional<Tensor2> PresentedBialgebra::try_mult_tensor(const Tensor2& s,
                                                           const Tensor2& t) const {
  Tensor2 out;
  for (const auto& [ab, c1] : s.terms())
    for (const auto& [xy, c2] : t.terms()) {
      auto left = try_mult_basis(ab.first, xy.first);
      auto right = try_mult_basis(ab.second, xy.second);
      if (!left || !right) return std::nullopt;
      out.axpy(c1 * c2, Tensor2::outer(*left, *right));
    }
  return out;
}

const SparseVec& RigidStructure::eta_of(int g) const {
  auto it = eta.find(g);
  if (it == eta.end()) {
    std::string label;
    try {
      label = monoid.name(g);
    } catch (const Error&) {
      label = std::to_string(g);
    }
    throw WindowTooSmall("no rigid grouplike recorded for degree " + label);
  }
  return it->second;
}

RigidStructure trivial_rigid(const PresentedBialgebra& A) {
  RigidStructure r{Monoid::finite_table({"1"}, 0, {{0}}), {}};
  r.eta[0] = A.unit();
  return r;
}

namespace {

bool homogeneous(const PresentedBialgebra& A, const SparseVec& v, int degree) {
  if (!A.graded()) return true;
  for (const auto& [i, c] : v.terms()) {
    (void)c;
    if (*A.degree_of(i) != degree) return false;
  }
  return true;
}

}  // namespace

Verdict check_rigid(const PresentedBialgebra& A, const RigidStructure& rigid) {
  Verdict v = Verdict::pass();
  const Monoid& G = rigid.monoid;
  if (A.graded() && !(A.monoid() == G))
    throw SchemaError("rigid structure over a different monoid than the bialgebra");

  if (!rigid.has(G.identity()))
    v &= Verdict::fail("rigid map does not cover the monoid identity");
  else if (!(rigid.eta_of(G.identity()) == A.unit()))
    v &= Verdict::fail("rigid map sends the identity to something other than the unit");

  for (const auto& [g, val] : rigid.eta) {
    G.name(g);  // range check
    if (val.is_zero()) {
      v &= Verdict::fail("rigid grouplike at " + G.name(g) + " is zero");
      continue;
    }
    if (!(A.comult(val) == Tensor2::outer(val, val)))
      v &= Verdict::fail("rigid image of " + G.name(g) + " is not grouplike");
    if (!A.counit(val).is_one())
      v &= Verdict::fail("rigid image of " + G.name(g) + " does not augment to 1");
    if (!homogeneous(A, val, g))
      v &= Verdict::fail("rigid image of " + G.name(g) + " is not homogeneous of degree " +
                         G.name(g));
  }

  for (auto it = rigid.eta.begin(); it != rigid.eta.end(); ++it)
    for (auto jt = std::next(it); jt != rigid.eta.end(); ++jt)
      if (it->second == jt->second)
        v &= Verdict::fail("rigid map repeats a value at " + G.name(it->first) + " and " +
                           G.name(jt->first));

  for (const auto& [g, vg] : rigid.eta)
    for (const auto& [h, vh] : rigid.eta) {
      const int gh = G.mul(g, h);
      if (!rigid.has(gh)) continue;
      auto p = A.try_mult(vg, vh);
      if (!p)
        v &= Verdict::indeterminate("product of rigid grouplikes " + G.name(g) + ", " +
                                    G.name(h) + " left the truncation");
      else if (!(*p == rigid.eta_of(gh)))
        v &= Verdict::fail("rigid map is not multiplicative at " + G.name(g) + ", " + G.name(h));
    }

  for (const auto& [g, vg] : rigid.eta)
    for (int a = 0; a < A.dim(); ++a) {
      SparseVec ea = SparseVec::unit(a, Scalar::one(A.field()));
      auto lr = A.try_mult(vg, ea);
      auto rl = A.try_mult(ea, vg);
      if (!lr || !rl) {
        if (static_cast<bool>(lr) != static_cast<bool>(rl))
          v &= Verdict::indeterminate("centrality of " + G.name(g) + " at " + A.name(a) +
                                      " is cut off by the truncation");
        continue;
      }
      if (!(*lr == *rl))
        v &= Verdict::fail("rigid grouplike at " + G.name(g) + " does not commute with " +
                           A.name(a));
    }

  return v;
}

Verdict BialgebraReport::overall() const {
  Verdict v = Verdict::pass();
  v &= unital;
  v &= associativity;
  v &= counit;
  v &= coassociativity;
  v &= comult_multiplicative;
  v &= counit_multiplicative;
  v &= grading;
  return v;
}

BialgebraReport check_bialgebra(const PresentedBialgebra& A) {
  BialgebraReport rep;
  const Field& k = A.field();
  const Scalar one = Scalar::one(k);

  auto unit_vec = [&](int i) { return SparseVec::unit(i, one); };

  /* Unit: two-sided multiplicative identity, grouplike under comult. */
  for (int i = 0; i < A.dim(); ++i) {
    auto l = A.try_mult(A.unit(), unit_vec(i));
    auto r = A.try_mult(unit_vec(i), A.unit());
    if (!l || !r)
      rep.unital &= Verdict::indeterminate("unit product with " + A.name(i) +
                                           " left the truncation");
    else {
      if (!(*l == unit_vec(i)))
        rep.unital &= Verdict::fail("unit fails on the left of " + A.name(i));
      if (!(*r == unit_vec(i)))
        rep.unital &= Verdict::fail("unit fails on the right of " + A.name(i));
    }
  }
  if (!(A.comult(A.unit()) == Tensor2::outer(A.unit(), A.unit())))
    rep.unital &= Verdict::fail("comult of the unit is not unit (x) unit");
  if (!A.counit(A.unit()).is_one())
    rep.unital &= Verdict::fail("counit of the unit is not 1");

  /* Associativity on basis triples, wherever both ways through are defined. */
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      auto ij = A.try_mult_basis(i, j);
      if (!ij) continue;
      for (int l = 0; l < A.dim(); ++l) {
        auto jl = A.try_mult_basis(j, l);
        if (!jl) continue;
        auto left = A.try_mult(*ij, unit_vec(l));
        auto right = A.try_mult(unit_vec(i), *jl);
        if (!left || !right) continue;
        if (!(*left == *right))
          rep.associativity &= Verdict::fail("associativity fails on (" + A.name(i) + ", " +
                                             A.name(j) + ", " + A.name(l) + ")");
      }
    }

  /* Counit axiom: both partial augmentations of comult give the identity. */
  for (int i = 0; i < A.dim(); ++i) {
    SparseVec left, right;
    const Tensor2 di = A.comult_basis(i);
    for (const auto& [ab, c] : di.terms()) {
      left.axpy(c * A.counit_basis(ab.first), unit_vec(ab.second));
      right.axpy(c * A.counit_basis(ab.second), unit_vec(ab.first));
    }
    if (!(left == unit_vec(i)))
      rep.counit &= Verdict::fail("(counit (x) id) comult misses " + A.name(i));
    if (!(right == unit_vec(i)))
      rep.counit &= Verdict::fail("(id (x) counit) comult misses " + A.name(i));
  }

  /* Coassociativity via three-leg expansions. */
  using Key3 = std::array<int, 3>;
  auto add3 = [](std::map<Key3, Scalar>& m, Key3 key, const Scalar& c) {
    auto it = m.find(key);
    if (it == m.end()) {
      m.emplace(key, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  for (int i = 0; i < A.dim(); ++i) {
    std::map<Key3, Scalar> lhs, rhs;
    const Tensor2 di = A.comult_basis(i);
    for (const auto& [ab, c] : di.terms()) {
      const Tensor2 da = A.comult_basis(ab.first);
      for (const auto& [xy, d] : da.terms()) add3(lhs, {xy.first, xy.second, ab.second}, c * d);
      const Tensor2 db = A.comult_basis(ab.second);
      for (const auto& [xy, d] : db.terms()) add3(rhs, {ab.first, xy.first, xy.second}, c * d);
    }
    if (!(lhs == rhs))
      rep.coassociativity &= Verdict::fail("coassociativity fails at " + A.name(i));
  }

  /* Comult and counit respect defined products. */
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      auto p = A.try_mult_basis(i, j);
      if (!p) continue;
      auto tensor = A.try_mult_tensor(A.comult_basis(i), A.comult_basis(j));
      if (!tensor)
        rep.comult_multiplicative &=
            Verdict::indeterminate("comult comparison for " + A.name(i) + " * " + A.name(j) +
                                   " left the truncation");
      else if (!(A.comult(*p) == *tensor))
        rep.comult_multiplicative &=
            Verdict::fail("comult is not multiplicative on " + A.name(i) + " * " + A.name(j));
      if (!(A.counit(*p) == A.counit_basis(i) * A.counit_basis(j)))
        rep.counit_multiplicative &=
            Verdict::fail("counit is not multiplicative on " + A.name(i) + " * " + A.name(j));
    }

  /* Grading: products move blocks along the monoid, comult stays diagonal. */
  if (A.graded()) {
    const Monoid& G = A.monoid();
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        auto p = A.try_mult_basis(i, j);
        if (!p) continue;
        if (!homogeneous(A, *p, G.mul(*A.degree_of(i), *A.degree_of(j))))
          rep.grading &= Verdict::fail("product " + A.name(i) + " * " + A.name(j) +
                                       " lands outside its degree block");
      }
    for (int i = 0; i < A.dim(); ++i) {
      const Tensor2 di = A.comult_basis(i);
      for (const auto& [ab, c] : di.terms()) {
        (void)c;
        if (*A.degree_of(ab.first) != *A.degree_of(i) ||
            *A.degree_of(ab.second) != *A.degree_of(i)) {
          rep.grading &= Verdict::fail("comult of " + A.name(i) + " leaves its diagonal block");
          break;
        }
      }
    }
    if (!homogeneous(A, A.unit(), G.identity()))
      rep.grading &= Verdict::fail("unit is not concentrated in the identity degree");
  }

  return rep;
}

bool is_cocommutative(const PresentedBialgebra& A) {
  for (int i = 0; i < A.dim(); ++i) {
    Tensor2 d = A.comult_basis(i);
    if (!(d == d.swapped())) return false;
  }
  return true;
}

Subspace gp_basis(const PresentedBialgebra& A, const RigidStructure& rigid, int Q) {
  if (A.graded() && !(A.monoid() == rigid.monoid))
    throw SchemaError("rigid structure over a different monoid than the bialgebra");
  const SparseVec& eta = rigid.eta_of(Q);
  const Field& k = A.field();
  std::vector<int> domain = A.block(Q);

  /* Rows of the linear map a -> comult(a) - a(x)eta - eta(x)a, one functional
   * per tensor coordinate. */
  std::map<Tensor2::Index, std::vector<SparseVec::Term>> rows;
  for (size_t c = 0; c < domain.size(); ++c) {
    SparseVec e = SparseVec::unit(domain[c], Scalar::one(k));
    Tensor2 t = A.comult_basis(domain[c]) - Tensor2::outer(e, eta) - Tensor2::outer(eta, e);
    for (const auto& [ij, coeff] : t.terms())
      rows[ij].push_back({static_cast<int>(c), coeff});
  }
  std::vector<SparseVec> functionals;
  for (auto& [ij, terms] : rows) {
    (void)ij;
    functionals.push_back(SparseVec::of_terms(std::move(terms)));
  }
  Subspace local = kernel(functionals, k, static_cast<int>(domain.size()));

  /* Embed the block coordinates back into the ambient space. */
  std::vector<SparseVec> embedded;
  for (const auto& row : local.rows()) {
    std::vector<SparseVec::Term> terms;
    for (const auto& [c, coeff] : row.terms()) terms.push_back({domain[c], coeff});
    embedded.push_back(SparseVec::of_terms(std::move(terms)));
  }
  return rref(embedded, k, A.dim());
}

Verdict check_pgc(const PresentedBialgebra& A, const RigidStructure& rigid,
                  const DegreeWindow& window) {
  if (!(window.monoid() == rigid.monoid))
    throw SchemaError("window and rigid structure over different monoids");
  Verdict v = Verdict::pass();
  const Monoid& G = rigid.monoid;

  std::map<int, Subspace> gp;
  for (int Q : window.elements()) gp.emplace(Q, gp_basis(A, rigid, Q));

  for (int Q : window.elements())
    for (int Qp : window.elements()) {
      /* Every term of the equation lives in degree Q*Q'; outside the window
       * the truncation makes no claim. */
      if (!window.mul(Q, Qp)) continue;
      const SparseVec& etaQ = rigid.eta_of(Q);
      const SparseVec& etaQp = rigid.eta_of(Qp);
      for (const auto& a : gp.at(Q).rows())
        for (const auto& ap : gp.at(Qp).rows()) {
          auto aQp = A.try_mult(a, etaQp);
          auto Qap = A.try_mult(etaQ, ap);
          auto apQ = A.try_mult(ap, etaQ);
          auto Qpa = A.try_mult(etaQp, a);
          if (!aQp || !Qap || !apQ || !Qpa) {
            v &= Verdict::indeterminate("compatibility terms at (" + G.name(Q) + ", " +
                                        G.name(Qp) + ") left the truncation");
            continue;
          }
          Tensor2 sum = Tensor2::outer(*aQp, *Qap) + Tensor2::outer(*Qap, *aQp) -
                        Tensor2::outer(*apQ, *Qpa) - Tensor2::outer(*Qpa, *apQ);
          if (!sum.is_zero())
            v &= Verdict::fail("primitive-grouplike compatibility fails at (" + G.name(Q) +
                               ", " + G.name(Qp) + ")");
        }
    }
  return v;
}

SuspensiveLie gp_lie(const PresentedBialgebra& A, const RigidStructure& rigid,
                     const DegreeWindow& window) {
  Verdict pgc = check_pgc(A, rigid, window);
  if (pgc.status == Status::Fail)
    throw NotClosedUnderBracket(pgc.witnesses.empty() ? "compatibility fails"
                                                      : pgc.witnesses.front());
  if (pgc.status == Status::Indeterminate)
    throw OverflowError(pgc.witnesses.empty() ? "compatibility undecidable in this window"
                                              : pgc.witnesses.front());

  const Monoid& G = rigid.monoid;
  const Field& k = A.field();

  std::map<int, Subspace> gp;
  std::map<int, std::vector<int>> lie_index;  // degree -> global Lie indices
  std::vector<BasisElement> basis;
  for (int Q : window.elements()) {
    gp.emplace(Q, gp_basis(A, rigid, Q));
    for (int r = 0; r < gp.at(Q).dim(); ++r) {
      lie_index[Q].push_back(static_cast<int>(basis.size()));
      basis.push_back({"gp:" + G.name(Q) + ":" + std::to_string(r), Q});
    }
  }

  SuspensiveLie L(k, G, basis);

  auto coords_in = [&](int degree, const SparseVec& vec) {
    auto c = gp.at(degree).coordinates(vec);
    if (!c)
      throw NotClosedUnderBracket("element of degree " + G.name(degree) +
                                  " escapes the generalized primitives");
    std::vector<SparseVec::Term> terms;
    for (const auto& [r, coeff] : c->terms()) terms.push_back({lie_index.at(degree)[r], coeff});
    return SparseVec::of_terms(std::move(terms));
  };

  std::vector<int> gens;
  if (G.kind() == Monoid::Kind::FreeRank1) {
    gens = {1};
  } else {
    for (int g = 0; g < G.size(); ++g)
      if (g != G.identity()) gens.push_back(g);
  }
  for (int g : gens)
    for (int Q : window.elements()) {
      auto target = window.mul(g, Q);
      if (!target) continue;
      const auto& rows = gp.at(Q).rows();
      for (size_t r = 0; r < rows.size(); ++r) {
        auto image = A.try_mult(rigid.eta_of(g), rows[r]);
        if (!image)
          throw OverflowError("action of " + G.name(g) + " on a degree-" + G.name(Q) +
                              " primitive left the truncation");
        if (image->is_zero()) continue;
        L.set_action(g, lie_index.at(Q)[r], coords_in(*target, *image));
      }
    }

  for (int Q : window.elements())
    for (int Qp : window.elements()) {
      auto target = window.mul(Q, Qp);
      if (!target) continue;
      for (size_t r = 0; r < gp.at(Q).rows().size(); ++r)
        for (size_t s = 0; s < gp.at(Qp).rows().size(); ++s) {
          const int gi = lie_index.at(Q)[r];
          const int gj = lie_index.at(Qp)[s];
          if (gi >= gj) continue;  // transposes come from antisymmetry
          const SparseVec& x = gp.at(Q).rows()[r];
          const SparseVec& y = gp.at(Qp).rows()[s];
          auto xy = A.try_mult(x, y);
          auto yx = A.try_mult(y, x);
          if (!xy || !yx)
            throw OverflowError("commutator at degrees (" + G.name(Q) + ", " + G.name(Qp) +
                                ") left the truncation");
          SparseVec comm = *xy - *yx;
          if (comm.is_zero()) continue;
          L.set_bracket(gi, gj, coords_in(*target, comm));
        }
    }

  return L;
}

Verdict is_gpg(const PresentedBialgebra& A, const RigidStructure& rigid,
               const DegreeWindow& window) {
  if (!(window.monoid() == rigid.monoid))
    throw SchemaError("window and rigid structure over different monoids");
  const Field& k = A.field();

  std::vector<SparseVec> seeds;
  seeds.push_back(A.unit());
  for (int Q : window.elements()) {
    seeds.push_back(rigid.eta_of(Q));
    const Subspace gps = gp_basis(A, rigid, Q);
    for (const auto& row : gps.rows()) seeds.push_back(row);
  }

  std::vector<int> in_window;
  for (int i = 0; i < A.dim(); ++i)
    if (!A.graded() || window.contains(*A.degree_of(i))) in_window.push_back(i);

  Subspace span = rref(seeds, k, A.dim());
  bool blocked = false;
  for (;;) {
    std::vector<SparseVec> grown = span.rows();
    bool changed = false;
    blocked = false;
    for (const auto& x : span.rows())
      for (const auto& y : span.rows()) {
        auto p = A.try_mult(x, y);
        if (!p) {
          blocked = true;
          continue;
        }
        if (!span.contains(*p)) {
          grown.push_back(*p);
          changed = true;
        }
      }
    if (!changed) break;
    span = rref(grown, k, A.dim());
  }

  std::vector<int> missing;
  for (int i : in_window)
    if (!span.contains(SparseVec::unit(i, Scalar::one(k)))) missing.push_back(i);
  if (missing.empty()) return Verdict::pass();
  if (blocked)
    return Verdict::indeterminate("closure is cut off by the truncation before reaching " +
                                  A.name(missing.front()));
  return Verdict::fail(A.name(missing.front()) +
                       " is not in the span of grouplikes and generalized primitives");
}

Verdict is_left_sided(const PresentedBialgebra& A, const RigidStructure& rigid,
                      const DegreeWindow& window) {
  if (!(window.monoid() == rigid.monoid))
    throw SchemaError("window and rigid structure over different monoids");
  Verdict v = Verdict::pass();
  const Monoid& G = rigid.monoid;

  std::map<int, Subspace> gp;
  for (int Q : window.elements()) gp.emplace(Q, gp_basis(A, rigid, Q));

  for (int Q : window.elements())
    for (int Qp : window.elements()) {
      if (!G.divides(Q, Qp)) continue;
      if (!window.mul(Q, Qp)) continue;  // the product degree must be in scope
      for (const auto& x : gp.at(Q).rows())
        for (const auto& y : gp.at(Qp).rows()) {
          auto p = A.try_mult(x, y);
          if (!p)
            v &= Verdict::indeterminate("product of primitives at (" + G.name(Q) + ", " +
                                        G.name(Qp) + ") left the truncation");
          else if (!p->is_zero())
            v &= Verdict::fail("nonzero product of a degree-" + G.name(Q) +
                               " primitive with a degree-" + G.name(Qp) +
                               " primitive although " + G.name(Q) + " divides " + G.name(Qp));
        }
    }
  return v;
}

Verdict is_torsion_free_bialgebra(const PresentedBialgebra& A, const RigidStructure& rigid,
                                  const DegreeWindow& window) {
  SuspensiveLie L = gp_lie(A, rigid, window);
  TorsionFlags flags = torsion_flags(L, window, true);
  if (!flags.torsion_free) {
    Verdict v = Verdict::pass();
    for (const auto& n : flags.notes)
      if (n.find("torsion element") != std::string::npos) v &= Verdict::fail(n);
    return v;
  }
  for (const auto& n : flags.notes)
    if (n.find("unverifiable") != std::string::npos) return Verdict::indeterminate(n);
  return Verdict::pass();
}

Tensor2 s_n(const PresentedBialgebra& A, const RigidStructure& rigid,
            const std::vector<SparseVec>& xs, const std::vector<int>& degrees) {
  const size_t n = xs.size();
  if (n < 2 || degrees.size() != n)
    throw SchemaError("s_n needs at least two factors with one degree each");
  for (size_t i = 0; i < n; ++i) {
    rigid.eta_of(degrees[i]);
    if (!homogeneous(A, xs[i], degrees[i]))
      throw SchemaError("s_n factor " + std::to_string(i) + " is not homogeneous of its degree");
  }

  Tensor2 out;
  const Scalar one = Scalar::one(A.field());
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    SparseVec left = A.unit();
    SparseVec right = A.unit();
    for (size_t i = 0; i < n; ++i) {
      const bool in_U = (mask >> i) & 1u;
      left = A.mult(left, in_U ? rigid.eta_of(degrees[i]) : xs[i]);
      right = A.mult(right, in_U ? xs[i] : rigid.eta_of(degrees[i]));
    }
    out.axpy(one, Tensor2::outer(left, right));
  }
  return out;
}

PresentedBialgebra monoid_algebra(Field field, const DegreeWindow& window) {
  const Monoid& G = window.monoid();
  std::vector<PresentedBialgebra::Element> basis;
  for (int g : window.elements()) basis.push_back({G.name(g), g});
  PresentedBialgebra A(field, G, basis);

  const Scalar one = Scalar::one(field);
  A.set_unit(SparseVec::unit(window.index_of(G.identity()), one));
  for (int i = 0; i < A.dim(); ++i) {
    A.set_counit(i, one);
    A.set_comult(i, Tensor2::pure(i, i, one));
  }
  const auto& elems = window.elements();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      auto prod = window.mul(elems[i], elems[j]);
      if (prod)
        A.set_mult(static_cast<int>(i), static_cast<int>(j),
                   SparseVec::unit(window.index_of(*prod), one));
      else
        A.set_mult_overflow(static_cast<int>(i), static_cast<int>(j));
    }
  return A;
}

RigidStructure monoid_algebra_rigid(const PresentedBialgebra& A, const DegreeWindow& window) {
  RigidStructure r{window.monoid(), {}};
  for (int g : window.elements()) {
    int idx = A.index_of(window.monoid().name(g));
    if (idx < 0) throw SchemaError("monoid algebra basis is missing " + window.monoid().name(g));
    r.eta[g] = SparseVec::unit(idx, Scalar::one(A.field()));
  }
  return r;
}

PresentedBialgebra dual_cyclic_group_algebra(int n, Field field) {
  if (n < 1) throw SchemaError("cyclic group order must be positive");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
  PresentedBialgebra A(field, names);

  const Scalar one = Scalar::one(field);
  std::vector<SparseVec::Term> all;
  for (int i = 0; i < n; ++i) all.push_back({i, one});
  A.set_unit(SparseVec::of_terms(all));
  A.set_counit(0, one);
  for (int i = 0; i < n; ++i) {
    A.set_mult(i, i, SparseVec::unit(i, one));  // delta functions multiply pointwise
    std::vector<Tensor2::Term> terms;
    for (int h = 0; h < n; ++h) terms.push_back({{h, ((i - h) % n + n) % n}, one});
    A.set_comult(i, Tensor2::of_terms(std::move(terms)));
  }
  return A;
}

std::vector<SparseVec> grouplikes_of_dual_cyclic_group_algebra(int n, Field field) {
  if (n < 1) throw SchemaError("cyclic group order must be positive");
  std::vector<Scalar> roots;
  const Scalar one = Scalar::one(field);
  if (field.kind == Field::Kind::Rational) {
    /* Rational roots of x^n - 1 are among the divisors of the constant term. */
    roots.push_back(one);
    if (n % 2 == 0) roots.push_back(-one);
  } else {
    for (long t = 1; t < field.p; ++t) {
      Scalar cand = Scalar::of_int(field, t);
      Scalar pw = one;
      for (int e = 0; e < n; ++e) pw = pw * cand;
      if (pw.is_one()) roots.push_back(cand);
    }
  }

  std::vector<SparseVec> out;
  for (const Scalar& r : roots) {
    std::vector<SparseVec::Term> terms;
    Scalar pw = one;
    for (int j = 0; j < n; ++j) {
      if (!pw.is_zero()) terms.push_back({j, pw});
      pw = pw * r;
    }
    out.push_back(SparseVec::of_terms(std::move(terms)));
  }
  return out;
}

}  // namespace suspla
