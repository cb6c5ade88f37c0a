#include "suspla/suspensive.hpp"

#include <algorithm>
#include <set>

namespace suspla {

SuspensiveSpace::SuspensiveSpace(Field field, Monoid monoid, std::vector<BasisElement> basis)
    : field_(field), monoid_(std::move(monoid)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.name.empty() || !seen.insert(b.name).second)
      throw SchemaError("basis names must be nonempty and distinct");
    monoid_.name(b.degree);  // range check
    blocks_[b.degree].push_back(static_cast<int>(i));
  }
}

int SuspensiveSpace::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& SuspensiveSpace::block(int degree) const {
  static const std::vector<int> empty;
  auto it = blocks_.find(degree);
  return it == blocks_.end() ? empty : it->second;
}

std::vector<int> SuspensiveSpace::populated_degrees() const {
  std::vector<int> out;
  for (const auto& [d, idxs] : blocks_)
    if (!idxs.empty()) out.push_back(d);
  return out;
}

void SuspensiveSpace::set_action(int g, int basis_idx, SparseVec image) {
  monoid_.name(g);
  if (basis_idx < 0 || basis_idx >= dim()) throw SchemaError("action source index out of range");
  if (monoid_.kind() == Monoid::Kind::FreeRank1 && g != 1)
    throw SchemaError("free monoid action is declared on the generator only");
  if (image.is_zero()) return;
  action_[g][basis_idx] = std::move(image);
}

SparseVec SuspensiveSpace::act_basis(int g, int idx) const {
  if (idx < 0 || idx >= dim()) throw SchemaError("action argument out of range");
  if (g == monoid_.identity()) return SparseVec::unit(idx, Scalar::one(field_));
  if (monoid_.kind() == Monoid::Kind::FiniteTable) {
    auto git = action_.find(g);
    if (git == action_.end()) return {};
    auto it = git->second.find(idx);
    return it == git->second.end() ? SparseVec() : it->second;
  }
  /* Free monoid: compose the generator map, memoized per (exponent, index). */
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = power_memo_.find({g, idx});
    if (it != power_memo_.end()) return it->second;
  }
  SparseVec result;
  if (g == 1) {
    auto git = action_.find(1);
    if (git != action_.end()) {
      auto it = git->second.find(idx);
      if (it != git->second.end()) result = it->second;
    }
  } else {
    result = act(1, act_basis(g - 1, idx));
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return power_memo_.emplace(std::pair<int, int>{g, idx}, std::move(result)).first->second;
}

SparseVec SuspensiveSpace::act(int g, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) out.axpy(c, act_basis(g, i));
  return out;
}

void SuspensiveLie::set_bracket(int i, int j, SparseVec value) {
  if (i < 0 || i >= dim() || j < 0 || j >= dim())
    throw SchemaError("bracket index out of range");
  bracket_[{i, j}] = std::move(value);
}

SparseVec SuspensiveLie::bracket_basis(int i, int j) const {
  auto it = bracket_.find({i, j});
  if (it != bracket_.end()) return it->second;
  it = bracket_.find({j, i});
  if (it != bracket_.end()) return it->second.scaled(-Scalar::one(field_));
  return {};
}

SparseVec SuspensiveLie::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) out.axpy(a * b, bracket_basis(i, j));
  return out;
}

namespace {

bool in_block(const SuspensiveSpace& V, const SparseVec& v, int degree) {
  for (const auto& [i, c] : v.terms()) {
    (void)c;
    if (V.degree_of(i) != degree) return false;
  }
  return true;
}

std::vector<int> action_generators(const Monoid& m) {
  if (m.kind() == Monoid::Kind::FreeRank1) return {1};
  std::vector<int> gs;
  for (int g = 0; g < m.size(); ++g)
    if (g != m.identity()) gs.push_back(g);
  return gs;
}

}  // namespace

Verdict check_suspensive(const SuspensiveLie& L, const DegreeWindow& window) {
  Verdict v = Verdict::pass();
  const Monoid& G = L.monoid();
  if (G != window.monoid()) throw SchemaError("window built over a different monoid");

  /* Action grading: declared images must land in the pushed block. */
  for (const auto& [g, per_basis] : L.action_data())
    for (const auto& [i, img] : per_basis) {
      const int target = G.mul(g, L.degree_of(i));
      if (!in_block(L, img, target))
        v &= Verdict::fail("action of " + G.name(g) + " on " + L.describe(i) +
                           " leaves the degree-" + G.name(target) + " block");
    }

  if (G.kind() == Monoid::Kind::FiniteTable) {
    /* Unitality: an explicitly declared identity action must be the identity. */
    auto idit = L.action_data().find(G.identity());
    if (idit != L.action_data().end())
      for (const auto& [i, img] : idit->second)
        if (!(img == SparseVec::unit(i, Scalar::one(L.field()))))
          v &= Verdict::fail("declared identity action is not the identity on " + L.describe(i));
    /* Associativity g(h x) = (gh) x, exhaustive over the table. */
    for (int g = 0; g < G.size(); ++g)
      for (int h = 0; h < G.size(); ++h)
        for (int i = 0; i < L.dim(); ++i) {
          SparseVec lhs = L.act(g, L.act_basis(h, i));
          SparseVec rhs = L.act_basis(G.mul(g, h), i);
          if (!(lhs == rhs))
            v &= Verdict::fail("action associativity fails: " + G.name(g) + "*(" + G.name(h) +
                               "*" + L.describe(i) + ")");
        }
  }

  /* Bracket grading and antisymmetry on declared entries. */
  for (const auto& [ij, val] : L.bracket_data()) {
    const auto [i, j] = ij;
    const int target = G.mul(L.degree_of(i), L.degree_of(j));
    if (!in_block(L, val, target))
      v &= Verdict::fail("bracket [" + L.describe(i) + "," + L.describe(j) +
                         "] leaves the degree-" + G.name(target) + " block");
    if (i == j && !val.is_zero())
      v &= Verdict::fail("bracket [" + L.describe(i) + "," + L.describe(i) + "] is nonzero");
    auto op = L.bracket_data().find({j, i});
    if (i != j && op != L.bracket_data().end() && !(val + op->second).is_zero())
      v &= Verdict::fail("brackets [" + L.describe(i) + "," + L.describe(j) +
                         "] and the transpose do not sum to zero");
  }

  auto in_window = [&](int idx) { return window.contains(L.degree_of(idx)); };

  /* Jacobi over in-window triples. */
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i; j < L.dim(); ++j)
      for (int k = j; k < L.dim(); ++k) {
        if (!in_window(i) || !in_window(j) || !in_window(k)) continue;
        SparseVec ei = SparseVec::unit(i, Scalar::one(L.field()));
        SparseVec ej = SparseVec::unit(j, Scalar::one(L.field()));
        SparseVec ek = SparseVec::unit(k, Scalar::one(L.field()));
        SparseVec sum = L.bracket(ei, L.bracket(ej, ek));
        sum.axpy(Scalar::one(L.field()), L.bracket(ej, L.bracket(ek, ei)));
        sum.axpy(Scalar::one(L.field()), L.bracket(ek, L.bracket(ei, ej)));
        if (!sum.is_zero())
          v &= Verdict::fail("Jacobi fails on (" + L.describe(i) + "," + L.describe(j) + "," +
                             L.describe(k) + ")");
      }

  /* Bilinearity of the bracket over the action. */
  for (int g : action_generators(G))
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j) {
        if (!in_window(i) || !in_window(j)) continue;
        SparseVec ei = SparseVec::unit(i, Scalar::one(L.field()));
        SparseVec ej = SparseVec::unit(j, Scalar::one(L.field()));
        SparseVec base = L.act(g, L.bracket(ei, ej));
        if (!(L.bracket(L.act_basis(g, i), ej) == base))
          v &= Verdict::fail("bracket not " + G.name(g) + "-linear in the first slot at (" +
                             L.describe(i) + "," + L.describe(j) + ")");
        if (!(L.bracket(ei, L.act_basis(g, j)) == base))
          v &= Verdict::fail("bracket not " + G.name(g) + "-linear in the second slot at (" +
                             L.describe(i) + "," + L.describe(j) + ")");
      }

  return v;
}

TorsionFlags torsion_flags(const SuspensiveSpace& V, const DegreeWindow& window,
                           bool skip_unverifiable) {
  TorsionFlags flags;
  const Monoid& G = V.monoid();
  bool any_checked = false;
  for (int d : V.populated_degrees()) {
    if (!window.contains(d)) continue;
    const auto& idxs = V.block(d);
    if (!window.mul(d, d)) {
      if (!skip_unverifiable)
        throw WindowTooSmall("square of populated degree " + G.name(d) + " leaves the window");
      flags.notes.push_back("degree " + G.name(d) + " unverifiable: square outside window");
      continue;
    }
    any_checked = true;
    /* Matrix of (d *) restricted to the block, rows = functionals. */
    std::vector<SparseVec> rows;
    std::map<int, int> local;
    for (size_t c = 0; c < idxs.size(); ++c) local[idxs[c]] = static_cast<int>(c);
    std::map<int, std::vector<SparseVec::Term>> row_terms;
    bool all_zero = true;
    for (size_t c = 0; c < idxs.size(); ++c) {
      SparseVec img = V.act_basis(d, idxs[c]);
      if (!img.is_zero()) all_zero = false;
      for (const auto& [t, s] : img.terms()) row_terms[t].push_back({static_cast<int>(c), s});
    }
    for (auto& [t, terms] : row_terms) {
      (void)t;
      std::sort(terms.begin(), terms.end(),
                [](const SparseVec::Term& a, const SparseVec::Term& b) { return a.first < b.first; });
      rows.push_back(SparseVec::of_terms(terms));
    }
    Subspace null = kernel(rows, V.field(), static_cast<int>(idxs.size()));
    if (null.dim() > 0) {
      flags.torsion_free = false;
      const int witness = idxs[null.rows().front().leading_index()];
      flags.notes.push_back("torsion element " + V.describe(witness) + " in degree " + G.name(d));
    }
    if (!all_zero) {
      flags.torsion = false;
      flags.notes.push_back("multiplication by " + G.name(d) + " is nonzero on its block");
    }
  }
  if (!any_checked && !V.populated_degrees().empty() && skip_unverifiable)
    flags.notes.push_back("no populated degree was verifiable in this window");
  return flags;
}

SuspensiveLie underlying_abelian(const SuspensiveLie& L) {
  SuspensiveLie A(L.field(), L.monoid(), L.basis());
  for (const auto& [g, per_basis] : L.action_data())
    for (const auto& [i, img] : per_basis) A.set_action(g, i, img);
  return A;
}

SparseVec SuspensiveMorphism::apply_basis(int idx) const {
  auto it = images.find(idx);
  return it == images.end() ? SparseVec() : it->second;
}

SparseVec SuspensiveMorphism::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v.terms()) out.axpy(c, apply_basis(i));
  return out;
}

Verdict check_suspensive_morphism(const SuspensiveMorphism& f, const DegreeWindow& window) {
  Verdict v = Verdict::pass();
  const SuspensiveLie& L = *f.domain;
  const SuspensiveLie& M = *f.codomain;
  if (L.monoid() != M.monoid()) throw SchemaError("morphism across different degree monoids");
  if (L.field() != M.field()) throw KindMismatch("morphism across different ground fields");

  for (int i = 0; i < L.dim(); ++i) {
    if (!window.contains(L.degree_of(i))) continue;
    if (!in_block(M, f.apply_basis(i), L.degree_of(i)))
      v &= Verdict::fail("image of " + L.describe(i) + " is not homogeneous of its degree");
  }
  for (int g : action_generators(L.monoid()))
    for (int i = 0; i < L.dim(); ++i) {
      if (!window.contains(L.degree_of(i))) continue;
      if (!(f.apply(L.act_basis(g, i)) == M.act(g, f.apply_basis(i))))
        v &= Verdict::fail("morphism does not commute with " + L.monoid().name(g) + " at " +
                           L.describe(i));
    }
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) {
      if (!window.contains(L.degree_of(i)) || !window.contains(L.degree_of(j))) continue;
      SparseVec lhs = f.apply(L.bracket_basis(i, j));
      SparseVec rhs = M.bracket(f.apply_basis(i), f.apply_basis(j));
      if (!(lhs == rhs))
        v &= Verdict::fail("morphism does not preserve [" + L.describe(i) + "," + L.describe(j) +
                           "]");
    }
  return v;
}

SuspensiveMorphism compose(const SuspensiveMorphism& g, const SuspensiveMorphism& f) {
  if (f.codomain != g.domain) throw SchemaError("composition domain mismatch");
  SuspensiveMorphism h;
  h.domain = f.domain;
  h.codomain = g.codomain;
  for (const auto& [i, img] : f.images) {
    SparseVec out = g.apply(img);
    if (!out.is_zero()) h.images[i] = std::move(out);
  }
  return h;
}

std::vector<SuspensiveMorphism> equivariant_map_space(const SuspensiveLie& L,
                                                      const SuspensiveLie& M) {
  if (L.monoid() != M.monoid()) throw SchemaError("map space across different degree monoids");
  if (L.field() != M.field()) throw KindMismatch("map space across different ground fields");
  const Field& k = L.field();

  /* Variables: pairs (domain i, codomain j) of equal degree. */
  std::vector<std::pair<int, int>> vars;
  std::map<std::pair<int, int>, int> var_of;
  for (int i = 0; i < L.dim(); ++i)
    for (int j : M.block(L.degree_of(i))) {
      var_of[{i, j}] = static_cast<int>(vars.size());
      vars.push_back({i, j});
    }

  std::vector<SparseVec> rows;
  auto add_rows = [&](int g, int i) {
    /* f(g * e_i) - g * f(e_i) = 0, one functional per codomain coordinate. */
    std::map<int, std::vector<SparseVec::Term>> by_codomain;
    const SparseVec moved = L.act_basis(g, i);
    for (const auto& [src, c] : moved.terms())
      for (int j : M.block(L.degree_of(src)))
        by_codomain[j].push_back({var_of.at({src, j}), c});
    for (int j : M.block(L.degree_of(i))) {
      const SparseVec pushed = M.act_basis(g, j);
      for (const auto& [t, c] : pushed.terms())
        by_codomain[t].push_back({var_of.at({i, j}), -c});
    }
    for (auto& [t, terms] : by_codomain) {
      (void)t;
      std::sort(terms.begin(), terms.end(),
                [](const SparseVec::Term& a, const SparseVec::Term& b) { return a.first < b.first; });
      /* Merge duplicate variable columns. */
      std::vector<SparseVec::Term> merged;
      for (auto& tm : terms) {
        if (!merged.empty() && merged.back().first == tm.first)
          merged.back().second = merged.back().second + tm.second;
        else
          merged.push_back(tm);
      }
      std::erase_if(merged, [](const SparseVec::Term& t2) { return t2.second.is_zero(); });
      if (!merged.empty()) rows.push_back(SparseVec::of_terms(std::move(merged)));
    }
  };
  for (int g : action_generators(L.monoid()))
    for (int i = 0; i < L.dim(); ++i) add_rows(g, i);

  Subspace null = kernel(rows, k, static_cast<int>(vars.size()));
  std::vector<SuspensiveMorphism> out;
  for (const auto& kv : null.rows()) {
    SuspensiveMorphism f;
    f.domain = &L;
    f.codomain = &M;
    std::map<int, std::vector<SparseVec::Term>> imgs;
    for (const auto& [v, c] : kv.terms()) imgs[vars[v].first].push_back({vars[v].second, c});
    for (auto& [i, terms] : imgs) {
      std::sort(terms.begin(), terms.end(),
                [](const SparseVec::Term& a, const SparseVec::Term& b) { return a.first < b.first; });
      f.images[i] = SparseVec::of_terms(std::move(terms));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace suspla
