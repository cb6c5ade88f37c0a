#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "suspla/error.hpp"

namespace suspla {

/* Mod-p operations algebra R(e): admissible monomials in the operations Q^i
 * and bQ^i, Adem rewriting, the excess quotients, coproduct, and the K-adic
 * associated graded.
 *
 * Generators carry a Bockstein flag eps and a superscript i, with internal
 * degree 2i(p-1) - eps.  At p = 2 the same encoding is used: Q^i here stands
 * for the classical degree-2i operation and bQ^i for the classical odd
 * operation of degree 2i-1, so bQ0 does not exist at p = 2.  All exposed
 * superscripts (text syntax included) follow this convention at every prime. */

struct DLGenerator {
  int eps = 0;
  int i = 0;
  auto operator<=>(const DLGenerator&) const = default;
};

using DLWord = std::vector<DLGenerator>;

struct DLConfig {
  int p = 2;
  int e = 0;            // excess threshold: monomials of excess < e vanish
  int degree_cap = 64;  // inputs of larger internal degree are rejected
  bool operator==(const DLConfig&) const = default;
};

int generator_degree(const DLGenerator& g, int p);
int word_degree(const DLWord& w, int p);

/* Excess of a monomial; the empty word gets a large sentinel so it survives
 * every quotient.  Single generators: excess(Q^n) is the classical value at
 * both parities of p. */
long excess(const DLWord& w, int p);
long excess_infinity();

/* The pair ab admits an Adem rewrite exactly when r > p*s - eps(b), writing
 * r and s for the superscripts.  The left Bockstein never matters. */
bool is_rewritable(const DLGenerator& a, const DLGenerator& b, int p);
bool is_admissible(const DLWord& w, int p);

/* One Adem rewrite of the two-letter word ab, as coefficient/word pairs with
 * coefficients reduced mod p and negative superscripts dropped.  Throws
 * NotApplicable on an admissible pair. */
struct DLTerm {
  unsigned coeff = 0;
  DLWord word;
};
std::vector<DLTerm> adem_step(const DLGenerator& a, const DLGenerator& b, int p);

/* A linear combination of admissible monomials of excess >= e, the working
 * representation of an element of R(e). */
class DLElement {
 public:
  using Terms = std::map<DLWord, unsigned>;

  DLElement() = default;
  explicit DLElement(DLConfig cfg) : cfg_(cfg) {}
  static DLElement unit(const DLConfig& cfg);

  const DLConfig& config() const { return cfg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const DLElement& o) const { return terms_ == o.terms_; }

  /* Maintains the invariant: drops coefficients that reduce to zero. */
  void add_term(const DLWord& w, unsigned coeff);

 private:
  DLConfig cfg_;
  Terms terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/* Rewrite until admissible, then delete monomials of excess < e.  The
 * strategy only affects the route, not the result; both are exposed so the
 * agreement is testable.  CapExceeded when the input degree exceeds the cap
 * (rewriting itself preserves degree). */
DLElement normalize(const DLWord& w, const DLConfig& cfg,
                    RewriteStrategy strategy = RewriteStrategy::Leftmost);
DLElement normalize_terms(const std::vector<DLTerm>& terms, const DLConfig& cfg,
                          RewriteStrategy strategy = RewriteStrategy::Leftmost);

DLElement add(const DLElement& x, const DLElement& y);
DLElement scale(const DLElement& x, unsigned c);
DLElement multiply(const DLElement& x, const DLElement& y, const DLConfig& cfg);

/* Augmentation: 1 on the unit and on powers of Q0, 0 elsewhere. */
unsigned augment(const DLElement& x);

/* Tensor-square combination; both legs are normalized admissible words. */
struct DLTensor {
  DLConfig cfg;
  std::map<std::pair<DLWord, DLWord>, unsigned> terms;
  bool operator==(const DLTensor& o) const { return terms == o.terms; }
};

/* Coproduct on generators per the Cartan-style formulas (the Bockstein
 * family splits as a coderivation against the Q series), extended
 * multiplicatively with each tensor leg normalized.  Compatibility with the
 * rewriting relations holds in the quotients with e >= 0, so configurations
 * with e < 0 are rejected with InvalidBound. */
DLTensor coproduct(const DLElement& x, const DLConfig& cfg);
DLTensor coproduct_word(const DLWord& w, const DLConfig& cfg);

/* All admissible monomials of the given internal degree and excess >= e, in
 * increasing word order.  A negative len_bound asks for the intrinsic bound,
 * which exists when e >= 0 and degree > 0; degree 0 (spanned by powers of Q0)
 * gets a small default, and e < 0 requires an explicit bound. */
std::vector<DLWord> basis_in_degree(const DLConfig& cfg, int degree, int len_bound = -1);

/* Filtration by powers of the ideal K of positive-degree elements.  Level of
 * zero is a large sentinel (zero lies in every power).  Requires e >= 0. */
int k_adic_level(const DLElement& x, const DLConfig& cfg);

/* Product in the associated graded E0R: the honest product when its level is
 * the sum of the factors' levels, zero otherwise.  Arguments must be
 * homogeneous.  The tag records the E0 bidegree of the product class. */
struct E0Product {
  DLElement value;
  int internal_degree = 0;
  int level = 0;
};
E0Product e0_multiply(const DLElement& x, const DLElement& y, const DLConfig& cfg);

/* Exhaustive one-sided vanishing check in E0R over admissible basis elements
 * of positive degree up to the bound: x*y = 0 whenever |x| <= |y| at odd p,
 * and whenever |x| < |y| at p = 2.  Same-degree nonzero products at p = 2 are
 * reported as notes, not failures. */
struct LeftSidedReport {
  Status verdict = Status::Pass;
  int pairs_checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return verdict == Status::Pass; }
};
LeftSidedReport verify_left_sided_e0(int p, int degree_bound);

/* Text syntax: whitespace-separated "Q<i>" and "bQ<i>" tokens; "1" or the
 * empty string is the empty word. */
DLWord parse_dl_word(const std::string& text, int p);
std::string format_dl_word(const DLWord& w);
std::string format_dl_element(const DLElement& x);
std::string format_dl_tensor(const DLTensor& t);

}  // namespace suspla
