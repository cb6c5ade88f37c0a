#include "suspla/linalg.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace suspla {

SparseVec SparseVec::unit(int index, Scalar coeff) {
  SparseVec v;
  if (!coeff.is_zero()) v.terms_.push_back({index, std::move(coeff)});
  return v;
}

SparseVec SparseVec::of_terms(std::vector<Term> terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].second.is_zero())
      throw SchemaError("sparse vector carries an explicit zero term");
    if (i > 0 && terms[i - 1].first >= terms[i].first)
      throw SchemaError("sparse vector indices not strictly increasing");
  }
  SparseVec v;
  v.terms_ = std::move(terms);
  return v;
}

int SparseVec::leading_index() const { return terms_.empty() ? -1 : terms_.front().first; }

Scalar SparseVec::get(int index, const Field& f) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Scalar::zero(f);
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec r = *this;
  if (!o.terms_.empty()) r.axpy(Scalar::one(o.terms_.front().second.field()), o);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
  SparseVec r = *this;
  if (!o.terms_.empty()) r.axpy(-Scalar::one(o.terms_.front().second.field()), o);
  return r;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [i, s] : terms_) r.terms_.push_back({i, s * c});
  return r;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& o) {
  if (c.is_zero() || o.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
      merged.push_back(terms_[a++]);
    } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
      merged.push_back({o.terms_[b].first, o.terms_[b].second * c});
      ++b;
    } else {
      Scalar s = terms_[a].second + o.terms_[b].second * c;
      if (!s.is_zero()) merged.push_back({terms_[a].first, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

/* Scale a rational row to a primitive integer vector.  Bounds coefficient
 * growth during long eliminations; no-op over prime fields. */
static void clear_denominators(SparseVec& v, const Field& f) {
  if (f.kind != Field::Kind::Rational || v.is_zero()) return;
  BigInt lcm = 1, gcd = 0;
  for (const auto& [i, s] : v.terms()) {
    (void)i;
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(s.rational())));
  }
  for (const auto& [i, s] : v.terms()) {
    (void)i;
    BigInt n = boost::multiprecision::numerator(s.rational()) * (lcm / boost::multiprecision::denominator(s.rational()));
    gcd = boost::multiprecision::gcd(gcd, n);
  }
  if (gcd == 0) return;
  v = v.scaled(Scalar::of_rational(BigRat(lcm, gcd)));
}

Subspace Subspace::full(Field field, int ambient_dim) {
  Subspace s(field, ambient_dim);
  s.rows_.reserve(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(SparseVec::unit(i, Scalar::one(field)));
    s.pivots_.push_back(i);
  }
  return s;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (r.is_zero()) break;
    if (r.leading_index() > pivots_[i]) continue;
    Scalar c = r.get(pivots_[i], field_);
    if (!c.is_zero()) r.axpy(-c, rows_[i]);
  }
  return r;
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
  SparseVec r = v;
  std::vector<SparseVec::Term> coords;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (r.is_zero()) break;
    Scalar c = r.get(pivots_[i], field_);
    if (!c.is_zero()) {
      r.axpy(-c, rows_[i]);
      coords.push_back({static_cast<int>(i), std::move(c)});
    }
  }
  if (!r.is_zero()) return std::nullopt;
  return SparseVec::of_terms(std::move(coords));
}

bool Subspace::contains_all(const Subspace& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

void Subspace::insert_and_reduce(SparseVec v) {
  clear_denominators(v, field_);
  v = reduce(v);
  if (v.is_zero()) return;
  clear_denominators(v, field_);
  v = v.scaled(v.terms().front().second.inverse());
  const int pivot = v.leading_index();
  /* Clear the new pivot column in the established rows. */
  for (auto& row : rows_) {
    Scalar c = row.get(pivot, field_);
    if (!c.is_zero()) row.axpy(-c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const size_t at = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + at, std::move(v));
}

void Subspace::dense_build(const std::vector<SparseVec>& in_rows) {
  const Scalar zero = Scalar::zero(field_);
  std::vector<std::vector<Scalar>> m;
  m.reserve(in_rows.size());
  for (const auto& r : in_rows) {
    std::vector<Scalar> row(ambient_, zero);
    for (const auto& [i, s] : r.terms()) {
      if (i < 0 || i >= ambient_) throw SchemaError("sparse index outside ambient dimension");
      row[i] = s;
    }
    m.push_back(std::move(row));
  }
  size_t rank = 0;
  for (int col = 0; col < ambient_ && rank < m.size(); ++col) {
    size_t sel = rank;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    Scalar inv = m[rank][col].inverse();
    for (auto& e : m[rank]) e = e * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar c = m[r][col];
      for (int j = 0; j < ambient_; ++j) m[r][j] = m[r][j] - c * m[rank][j];
    }
    pivots_.push_back(col);
    ++rank;
  }
  for (size_t r = 0; r < rank; ++r) {
    std::vector<SparseVec::Term> terms;
    for (int j = 0; j < ambient_; ++j)
      if (!m[r][j].is_zero()) terms.push_back({j, m[r][j]});
    rows_.push_back(SparseVec::of_terms(std::move(terms)));
  }
}

Subspace rref(const std::vector<SparseVec>& rows, Field field, int ambient_dim) {
  if (ambient_dim < 0) throw InvalidBound("negative ambient dimension");
  Subspace s(field, ambient_dim);
  if (ambient_dim < 64) {
    s.dense_build(rows);
    return s;
  }
  for (const auto& r : rows) {
    if (!r.terms().empty() && r.terms().back().first >= ambient_dim)
      throw SchemaError("sparse index outside ambient dimension");
    s.insert_and_reduce(r);
  }
  return s;
}

Subspace kernel(const std::vector<SparseVec>& rows, Field field, int domain_dim) {
  Subspace r = rref(rows, field, domain_dim);
  std::vector<bool> is_pivot(domain_dim, false);
  for (int p : r.pivots()) is_pivot[p] = true;
  std::vector<SparseVec> basis;
  for (int free = 0; free < domain_dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<SparseVec::Term> terms;
    for (size_t i = 0; i < r.rows().size(); ++i) {
      Scalar c = r.rows()[i].get(free, field);
      if (!c.is_zero()) terms.push_back({r.pivots()[i], -c});
    }
    terms.push_back({free, Scalar::one(field)});
    std::sort(terms.begin(), terms.end(),
              [](const SparseVec::Term& a, const SparseVec::Term& b) { return a.first < b.first; });
    basis.push_back(SparseVec::of_terms(std::move(terms)));
  }
  return rref(basis, field, domain_dim);
}

QuotientBasis::QuotientBasis(Subspace ambient, const Subspace& relations)
    : ambient_(std::move(ambient)), rel_coords_(ambient_.field(), ambient_.dim()) {
  if (relations.ambient_dim() != ambient_.ambient_dim() || relations.field() != ambient_.field())
    throw NotSubspace("relation space lives in a different ambient space");
  std::vector<SparseVec> coord_rows;
  for (const auto& row : relations.rows()) {
    auto c = ambient_.coordinates(row);
    if (!c) throw NotSubspace("relation vector outside the ambient space");
    coord_rows.push_back(std::move(*c));
  }
  rel_coords_ = rref(coord_rows, ambient_.field(), ambient_.dim());
  std::vector<bool> is_pivot(ambient_.dim(), false);
  for (int p : rel_coords_.pivots()) is_pivot[p] = true;
  for (int i = 0; i < ambient_.dim(); ++i)
    if (!is_pivot[i]) reps_.push_back(i);
}

SparseVec QuotientBasis::normal_form_coords(const SparseVec& v) const {
  auto c = ambient_.coordinates(v);
  if (!c) throw NotSubspace("vector outside the ambient space");
  return rel_coords_.reduce(*c);
}

SparseVec QuotientBasis::normal_form(const SparseVec& v) const {
  SparseVec coords = normal_form_coords(v);
  SparseVec out;
  for (const auto& [i, s] : coords.terms()) out.axpy(s, ambient_.rows()[i]);
  return out;
}

}  // namespace suspla
