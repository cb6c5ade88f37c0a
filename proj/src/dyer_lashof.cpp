#include "suspla/dyer_lashof.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "suspla/linalg.hpp"

namespace suspla {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_generator(const DLGenerator& g, int p) {
  if (g.eps != 0 && g.eps != 1)
    throw SchemaError("Bockstein flag must be 0 or 1");
  if (g.i < 0) throw SchemaError("negative superscript " + std::to_string(g.i));
  if (p == 2 && g.eps == 1 && g.i == 0)
    throw SchemaError("bQ0 does not exist at p = 2");
}

void validate_config(const DLConfig& cfg) {
  if (!is_prime(cfg.p)) throw SchemaError("p must be a prime, got " + std::to_string(cfg.p));
}

void validate_word(const DLWord& w, const DLConfig& cfg) {
  validate_config(cfg);
  for (const DLGenerator& g : w) validate_generator(g, cfg.p);
  const int d = word_degree(w, cfg.p);
  if (d > cfg.degree_cap)
    throw CapExceeded("internal degree " + std::to_string(d) + " exceeds the cap " +
                      std::to_string(cfg.degree_cap));
}

unsigned long long modpow(unsigned long long b, unsigned long long e, unsigned long long m) {
  unsigned long long acc = 1;
  b %= m;
  while (e) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return acc;
}

/* C(a, b) mod p by Lucas' theorem; zero unless 0 <= b <= a.  Digit binomials
 * go through factorial products with a Fermat inverse so nothing overflows. */
unsigned binom_mod(long a, long b, int p) {
  if (b < 0 || a < 0 || b > a) return 0;
  unsigned long long acc = 1;
  while (a > 0 || b > 0) {
    const long ai = a % p, bi = b % p;
    if (bi > ai) return 0;
    unsigned long long num = 1, den = 1;
    for (long t = 1; t <= bi; ++t) {
      num = num * ((ai - t + 1) % p) % p;
      den = den * (t % p) % p;
    }
    acc = acc * num % p * modpow(den, p - 2, p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<unsigned>(acc);
}

unsigned sign_mod(long exponent, int p) { return exponent % 2 == 0 ? 1u : unsigned(p - 1); }

/* At p = 2 a generator is a renamed classical operation of degree 2i - eps;
 * the rewriting formulas below work with that classical superscript. */
int uscript(const DLGenerator& g) { return 2 * g.i - g.eps; }
DLGenerator from_uscript(int u) {
  return u % 2 == 0 ? DLGenerator{0, u / 2} : DLGenerator{1, (u + 1) / 2};
}

std::vector<DLTerm> adem_rhs(const DLGenerator& a, const DLGenerator& b, int p) {
  std::vector<DLTerm> out;
  if (p == 2) {
    const int r = uscript(a), s = uscript(b);
    for (int k = 0; k <= r + s; ++k) {
      const unsigned c = binom_mod(k - s - 1, 2L * k - r, 2);
      if (c) out.push_back({c, {from_uscript(r + s - k), from_uscript(k)}});
    }
    return out;
  }
  const int r = a.i, s = b.i;
  for (int i = 0; i <= r + s; ++i) {
    const long pi = 1L * p * i;
    const unsigned sg = sign_mod(r + i, p);
    if (b.eps == 0) {
      const unsigned c = binom_mod(pi - 1L * (p - 1) * s - i - 1, pi - r, p);
      if (c) out.push_back({c * sg % p, {{a.eps, r + s - i}, {0, i}}});
    } else if (a.eps == 0) {
      const unsigned c1 = binom_mod(pi - 1L * (p - 1) * s - i, pi - r, p);
      if (c1) out.push_back({c1 * sg % p, {{1, r + s - i}, {0, i}}});
      const unsigned c2 = binom_mod(pi - 1L * (p - 1) * s - i - 1, pi - r - 1, p);
      if (c2) out.push_back({c2 * sg % p * (p - 1) % p, {{0, r + s - i}, {1, i}}});
    } else {
      const unsigned c = binom_mod(pi - 1L * (p - 1) * s - i - 1, pi - r - 1, p);
      if (c) out.push_back({c * sg % p * (p - 1) % p, {{1, r + s - i}, {1, i}}});
    }
  }
  return out;
}

/* The pair-rewrite memo is the only shared mutable state in this module. */
std::shared_mutex adem_memo_mutex;
std::map<std::array<int, 5>, std::shared_ptr<const std::vector<DLTerm>>> adem_memo;

std::shared_ptr<const std::vector<DLTerm>> cached_adem(const DLGenerator& a,
                                                       const DLGenerator& b, int p) {
  const std::array<int, 5> key{p, a.eps, a.i, b.eps, b.i};
  {
    std::shared_lock lock(adem_memo_mutex);
    auto it = adem_memo.find(key);
    if (it != adem_memo.end()) return it->second;
  }
  auto value = std::make_shared<const std::vector<DLTerm>>(adem_rhs(a, b, p));
  std::unique_lock lock(adem_memo_mutex);
  return adem_memo.emplace(key, std::move(value)).first->second;
}

constexpr long kStepCeiling = 20'000'000;
constexpr int kDegreeZeroLen = 6;

int min_positive_degree(int p) { return p == 2 ? 1 : 2 * p - 3; }

}  // namespace

int generator_degree(const DLGenerator& g, int p) { return 2 * g.i * (p - 1) - g.eps; }

int word_degree(const DLWord& w, int p) {
  int d = 0;
  for (const DLGenerator& g : w) d += generator_degree(g, p);
  return d;
}

long excess_infinity() { return std::numeric_limits<long>::max() / 2; }

long excess(const DLWord& w, int p) {
  if (w.empty()) return excess_infinity();
  const long rest = word_degree(w, p) - generator_degree(w.front(), p);
  return 2L * w.front().i - w.front().eps - rest;
}

bool is_rewritable(const DLGenerator& a, const DLGenerator& b, int p) {
  return a.i > 1L * p * b.i - b.eps;
}

bool is_admissible(const DLWord& w, int p) {
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (is_rewritable(w[j], w[j + 1], p)) return false;
  return true;
}

std::vector<DLTerm> adem_step(const DLGenerator& a, const DLGenerator& b, int p) {
  if (!is_prime(p)) throw SchemaError("p must be a prime, got " + std::to_string(p));
  validate_generator(a, p);
  validate_generator(b, p);
  if (!is_rewritable(a, b, p))
    throw NotApplicable("the pair " + format_dl_word({a, b}) + " is admissible");
  return *cached_adem(a, b, p);
}

DLElement DLElement::unit(const DLConfig& cfg) {
  DLElement x(cfg);
  x.terms_[DLWord{}] = 1;
  return x;
}

void DLElement::add_term(const DLWord& w, unsigned coeff) {
  const unsigned c = coeff % unsigned(cfg_.p);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (fresh) return;
  it->second = (it->second + c) % unsigned(cfg_.p);
  if (it->second == 0) terms_.erase(it);
}

DLElement normalize_terms(const std::vector<DLTerm>& terms, const DLConfig& cfg,
                          RewriteStrategy strategy) {
  for (const DLTerm& t : terms) validate_word(t.word, cfg);

  DLElement out(cfg);
  std::vector<DLTerm> work;
  for (const DLTerm& t : terms)
    if (t.coeff % cfg.p != 0) work.push_back({t.coeff % unsigned(cfg.p), t.word});

  long steps = 0;
  while (!work.empty()) {
    DLTerm t = std::move(work.back());
    work.pop_back();

    int pos = -1;
    if (strategy == RewriteStrategy::Leftmost) {
      for (std::size_t j = 0; j + 1 < t.word.size(); ++j)
        if (is_rewritable(t.word[j], t.word[j + 1], cfg.p)) {
          pos = static_cast<int>(j);
          break;
        }
    } else {
      for (std::size_t j = t.word.size(); j-- > 1;)
        if (is_rewritable(t.word[j - 1], t.word[j], cfg.p)) {
          pos = static_cast<int>(j - 1);
          break;
        }
    }

    if (pos < 0) {
      if (excess(t.word, cfg.p) >= cfg.e) out.add_term(t.word, t.coeff);
      continue;
    }

    auto rhs = cached_adem(t.word[pos], t.word[pos + 1], cfg.p);
    const std::vector<DLTerm>& pairs = *rhs;
    for (const DLTerm& pr : pairs) {
      DLWord w;
      w.reserve(t.word.size());
      w.insert(w.end(), t.word.begin(), t.word.begin() + pos);
      w.insert(w.end(), pr.word.begin(), pr.word.end());
      w.insert(w.end(), t.word.begin() + pos + 2, t.word.end());
      work.push_back({t.coeff * pr.coeff % unsigned(cfg.p), std::move(w)});
    }
    if (++steps > kStepCeiling)
      throw Error(ExitCode::Indeterminate, "adem rewriting exceeded the step ceiling");
  }
  return out;
}

DLElement normalize(const DLWord& w, const DLConfig& cfg, RewriteStrategy strategy) {
  return normalize_terms({{1, w}}, cfg, strategy);
}

DLElement add(const DLElement& x, const DLElement& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (!(x.config() == y.config())) throw SchemaError("mismatched algebra configurations");
  DLElement out = x;
  for (const auto& [w, c] : y.terms()) out.add_term(w, c);
  return out;
}

DLElement scale(const DLElement& x, unsigned c) {
  DLElement out(x.config());
  for (const auto& [w, cw] : x.terms()) out.add_term(w, cw * (c % x.config().p));
  return out;
}

DLElement multiply(const DLElement& x, const DLElement& y, const DLConfig& cfg) {
  std::vector<DLTerm> expanded;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      const int d = word_degree(wx, cfg.p) + word_degree(wy, cfg.p);
      if (d > cfg.degree_cap)
        throw CapExceeded("product degree " + std::to_string(d) + " exceeds the cap " +
                          std::to_string(cfg.degree_cap));
      DLWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      expanded.push_back({cx * cy % unsigned(cfg.p), std::move(w)});
    }
  return normalize_terms(expanded, cfg);
}

unsigned augment(const DLElement& x) {
  unsigned acc = 0;
  const unsigned p = unsigned(x.config().p);
  for (const auto& [w, c] : x.terms()) {
    bool all_q0 = true;
    for (const DLGenerator& g : w)
      if (g.eps != 0 || g.i != 0) all_q0 = false;
    if (all_q0) acc = (acc + c) % p;
  }
  return acc;
}

namespace {

/* Coproduct of one generator as a list of (coefficient, left word, right
 * word) with single-letter legs. */
struct GenSplit {
  unsigned coeff;
  DLWord left, right;
};

std::vector<GenSplit> gen_coproduct(const DLGenerator& g, int p) {
  std::vector<GenSplit> out;
  if (p == 2) {
    const int u = uscript(g);
    for (int k = 0; k <= u; ++k)
      out.push_back({1, {from_uscript(k)}, {from_uscript(u - k)}});
    return out;
  }
  if (g.eps == 0) {
    for (int j = 0; j <= g.i; ++j)
      out.push_back({1, {DLGenerator{0, j}}, {DLGenerator{0, g.i - j}}});
    return out;
  }
  /* The Bockstein family splits as a coderivation against the Q series; this
   * is the unique shape that stays coassociative and counital. */
  for (int j = 0; j <= g.i; ++j) {
    out.push_back({1, {DLGenerator{1, j}}, {DLGenerator{0, g.i - j}}});
    out.push_back({1, {DLGenerator{0, j}}, {DLGenerator{1, g.i - j}}});
  }
  return out;
}

}  // namespace

DLTensor coproduct_word(const DLWord& w, const DLConfig& cfg) {
  validate_word(w, cfg);
  if (cfg.e < 0)
    throw InvalidBound("the coproduct descends to the excess quotients with e >= 0 only");
  /* Expand multiplicatively over free words, then normalize both legs. */
  struct FreeTerm {
    unsigned coeff;
    DLWord left, right;
  };
  std::vector<FreeTerm> acc{{1, {}, {}}};
  for (const DLGenerator& g : w) {
    std::vector<GenSplit> parts = gen_coproduct(g, cfg.p);
    std::vector<FreeTerm> next;
    next.reserve(acc.size() * parts.size());
    for (const FreeTerm& t : acc)
      for (const GenSplit& s : parts) {
        FreeTerm n;
        n.coeff = t.coeff * s.coeff % unsigned(cfg.p);
        n.left = t.left;
        n.left.insert(n.left.end(), s.left.begin(), s.left.end());
        n.right = t.right;
        n.right.insert(n.right.end(), s.right.begin(), s.right.end());
        next.push_back(std::move(n));
      }
    acc = std::move(next);
  }

  DLTensor out;
  out.cfg = cfg;
  for (const FreeTerm& t : acc) {
    const DLElement l = normalize(t.left, cfg);
    const DLElement r = normalize(t.right, cfg);
    for (const auto& [wl, cl] : l.terms())
      for (const auto& [wr, cr] : r.terms()) {
        const unsigned c = t.coeff * cl % unsigned(cfg.p) * cr % unsigned(cfg.p);
        auto [it, fresh] = out.terms.emplace(std::make_pair(wl, wr), c);
        if (!fresh) {
          it->second = (it->second + c) % unsigned(cfg.p);
          if (it->second == 0) out.terms.erase(it);
        } else if (c == 0) {
          out.terms.erase(it);
        }
      }
  }
  return out;
}

DLTensor coproduct(const DLElement& x, const DLConfig& cfg) {
  if (cfg.e < 0)
    throw InvalidBound("the coproduct descends to the excess quotients with e >= 0 only");
  DLTensor out;
  out.cfg = cfg;
  for (const auto& [w, c] : x.terms()) {
    DLTensor part = coproduct_word(w, cfg);
    for (const auto& [pair, cp] : part.terms) {
      const unsigned add = c * cp % unsigned(cfg.p);
      auto [it, fresh] = out.terms.emplace(pair, add);
      if (!fresh) {
        it->second = (it->second + add) % unsigned(cfg.p);
        if (it->second == 0) out.terms.erase(it);
      } else if (add == 0) {
        out.terms.erase(it);
      }
    }
  }
  return out;
}

namespace {

void enumerate_admissible(const DLConfig& cfg, int degree, int len_bound, DLWord& cur,
                          int cur_degree, std::vector<DLWord>& out) {
  if (cur_degree == degree && excess(cur, cfg.p) >= cfg.e) out.push_back(cur);
  const int slots = len_bound - static_cast<int>(cur.size());
  if (slots == 0) return;
  /* Each future letter has degree >= -1, so give up when the budget cannot
   * be reached even with maximal superscripts. */
  const int max_i = (degree - cur_degree + slots + 2) / (2 * (cfg.p - 1)) + 1;
  for (int eps = 0; eps <= 1; ++eps)
    for (int i = 0; i <= max_i; ++i) {
      const DLGenerator g{eps, i};
      if (cfg.p == 2 && eps == 1 && i == 0) continue;
      const int gd = generator_degree(g, cfg.p);
      if (cur_degree + gd - (slots - 1) > degree) continue;
      if (!cur.empty() && is_rewritable(cur.back(), g, cfg.p)) continue;
      cur.push_back(g);
      enumerate_admissible(cfg, degree, len_bound, cur, cur_degree + gd, out);
      cur.pop_back();
    }
}

}  // namespace

std::vector<DLWord> basis_in_degree(const DLConfig& cfg, int degree, int len_bound) {
  validate_config(cfg);
  if (degree > cfg.degree_cap)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the cap");
  if (len_bound < 0) {
    if (cfg.e < 0)
      throw InvalidBound("basis enumeration below excess zero needs an explicit word length");
    if (degree < 0) return {};
    len_bound = degree > 0 ? degree / min_positive_degree(cfg.p) : kDegreeZeroLen;
  }
  std::vector<DLWord> out;
  DLWord cur;
  enumerate_admissible(cfg, degree, len_bound, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/* Spans of the powers of K = (positive-degree generators) inside R(e), one
 * degree at a time.  Local to each computation: no shared mutable state. */
class KAdicCache {
 public:
  explicit KAdicCache(const DLConfig& cfg) : cfg_(cfg), field_(Field::prime(cfg.p)) {
    if (cfg.e < 0)
      throw InvalidBound("the k-adic filtration needs excess threshold at least zero");
  }

  const std::vector<DLWord>& basis(int d) {
    auto it = basis_.find(d);
    if (it != basis_.end()) return it->second;
    std::vector<DLWord> b = basis_in_degree(cfg_, d);
    auto& slot = basis_[d];
    slot = std::move(b);
    auto& idx = index_[d];
    for (int j = 0; j < static_cast<int>(slot.size()); ++j) idx[slot[j]] = j;
    return slot;
  }

  SparseVec coords(const DLElement& x, int d) {
    basis(d);
    const auto& idx = index_.at(d);
    std::map<int, Scalar> acc;
    for (const auto& [w, c] : x.terms()) {
      auto it = idx.find(w);
      if (it == idx.end()) throw SchemaError("element outside the enumerated basis");
      acc[it->second] = Scalar::of_int(field_, static_cast<long>(c));
    }
    std::vector<SparseVec::Term> terms;
    for (auto& [j, s] : acc)
      if (!s.is_zero()) terms.push_back({j, s});
    return SparseVec::of_terms(std::move(terms));
  }

  const Subspace& kpow(int n, int d) {
    const auto key = std::make_pair(n, d);
    auto it = kn_.find(key);
    if (it != kn_.end()) return it->second;
    const int dim = static_cast<int>(basis(d).size());
    if (n <= 1) return kn_.emplace(key, Subspace::full(field_, dim)).first->second;
    std::vector<SparseVec> rows;
    for (int d1 = 1; d1 <= d - 1; ++d1) {
      const std::vector<DLWord> left = basis(d1);
      if (left.empty()) continue;
      const Subspace& tail = kpow(n - 1, d - d1);
      const std::vector<DLWord> right = basis(d - d1);
      std::vector<SparseVec> tail_rows = tail.rows();
      for (const DLWord& b1 : left) {
        const DLElement x1 = normalize(b1, cfg_);
        for (const SparseVec& row : tail_rows) {
          DLElement y(cfg_);
          const std::vector<SparseVec::Term>& row_terms = row.terms();
          for (const auto& [j, s] : row_terms) {
            DLElement part = normalize(right[j], cfg_);
            y = add(y, scale(part, s.residue()));
          }
          const DLElement prod = multiply(x1, y, cfg_);
          if (!prod.is_zero()) rows.push_back(coords(prod, d));
        }
      }
    }
    return kn_.emplace(key, rref(rows, field_, dim)).first->second;
  }

  int level_of(const DLElement& x) {
    if (x.is_zero()) return std::numeric_limits<int>::max();
    std::map<int, DLElement> comps;
    for (const auto& [w, c] : x.terms()) {
      const int d = word_degree(w, cfg_.p);
      auto [it, fresh] = comps.emplace(d, DLElement(cfg_));
      it->second.add_term(w, c);
    }
    int level = std::numeric_limits<int>::max();
    for (const auto& [d, comp] : comps) {
      if (d <= 0) {
        level = 0;
        continue;
      }
      const SparseVec v = coords(comp, d);
      int n = 1;
      while (n <= d + 1 && kpow(n + 1, d).contains(v)) ++n;
      level = std::min(level, n);
    }
    return level;
  }

  const DLConfig& config() const { return cfg_; }

 private:
  DLConfig cfg_;
  Field field_;
  std::map<int, std::vector<DLWord>> basis_;
  std::map<int, std::map<DLWord, int>> index_;
  std::map<std::pair<int, int>, Subspace> kn_;
};

int homogeneous_degree(const DLElement& x, int p) {
  bool first = true;
  int deg = 0;
  for (const auto& [w, c] : x.terms()) {
    const int d = word_degree(w, p);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      throw SchemaError("argument is not homogeneous");
    }
  }
  return deg;
}

E0Product e0_with_cache(KAdicCache& cache, const DLElement& x, const DLElement& y) {
  const DLConfig& cfg = cache.config();
  const int dx = homogeneous_degree(x, cfg.p);
  const int dy = homogeneous_degree(y, cfg.p);
  E0Product out;
  out.internal_degree = dx + dy;
  if (x.is_zero() || y.is_zero()) {
    out.value = DLElement(cfg);
    out.level = 0;
    return out;
  }
  const int lx = cache.level_of(x);
  const int ly = cache.level_of(y);
  out.level = lx + ly;
  const DLElement prod = multiply(x, y, cfg);
  if (prod.is_zero() || cache.level_of(prod) != lx + ly)
    out.value = DLElement(cfg);
  else
    out.value = prod;
  return out;
}

}  // namespace

int k_adic_level(const DLElement& x, const DLConfig& cfg) {
  KAdicCache cache(cfg);
  return cache.level_of(x);
}

E0Product e0_multiply(const DLElement& x, const DLElement& y, const DLConfig& cfg) {
  KAdicCache cache(cfg);
  return e0_with_cache(cache, x, y);
}

LeftSidedReport verify_left_sided_e0(int p, int degree_bound) {
  if (degree_bound < 1) throw InvalidBound("degree bound must be positive");
  DLConfig cfg{p, 0, 2 * degree_bound + 4};
  KAdicCache cache(cfg);
  LeftSidedReport rep;
  for (int d1 = 1; d1 <= degree_bound; ++d1) {
    const std::vector<DLWord> lows = cache.basis(d1);
    if (lows.empty()) continue;
    for (int d2 = d1; d2 <= degree_bound; ++d2) {
      const std::vector<DLWord> highs = cache.basis(d2);
      for (const DLWord& xw : lows)
        for (const DLWord& yw : highs) {
          ++rep.pairs_checked;
          const DLElement x = normalize(xw, cfg);
          const DLElement y = normalize(yw, cfg);
          const E0Product prod = e0_with_cache(cache, x, y);
          if (prod.value.is_zero()) continue;
          const std::string text =
              format_dl_word(xw) + " * " + format_dl_word(yw) + " = " +
              format_dl_element(prod.value);
          if (p == 2 && d1 == d2) {
            rep.notes.push_back("nonzero product of equal internal degrees in E0R: " + text);
          } else {
            rep.verdict = Status::Fail;
            rep.failures.push_back("one-sided vanishing violated in E0R: " + text);
          }
        }
    }
  }
  return rep;
}

DLWord parse_dl_word(const std::string& text, int p) {
  if (!is_prime(p)) throw SchemaError("p must be a prime, got " + std::to_string(p));
  DLWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    DLGenerator g;
    std::size_t at = 0;
    if (tok.rfind("bQ", 0) == 0) {
      g.eps = 1;
      at = 2;
    } else if (tok.rfind("Q", 0) == 0) {
      g.eps = 0;
      at = 1;
    } else {
      throw SchemaError("cannot parse generator '" + tok + "'");
    }
    try {
      std::size_t used = 0;
      g.i = std::stoi(tok.substr(at), &used);
      if (used != tok.size() - at) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw SchemaError("cannot parse generator '" + tok + "'");
    }
    validate_generator(g, p);
    out.push_back(g);
  }
  return out;
}

std::string format_dl_word(const DLWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) out += ' ';
    out += (w[j].eps ? "bQ" : "Q") + std::to_string(w[j].i);
  }
  return out;
}

std::string format_dl_element(const DLElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    if (c != 1) out += std::to_string(c) + "*";
    out += format_dl_word(w);
  }
  return out;
}

std::string format_dl_tensor(const DLTensor& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [pair, c] : t.terms) {
    if (!first) out += " + ";
    first = false;
    if (c != 1) out += std::to_string(c) + "*";
    out += format_dl_word(pair.first) + " (x) " + format_dl_word(pair.second);
  }
  return out;
}

}  // namespace suspla
