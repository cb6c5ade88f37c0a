#include "suspla/monoid.hpp"

#include <algorithm>
#include <set>

namespace suspla {

Monoid Monoid::finite_table(std::vector<std::string> names, int identity,
                            std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw SchemaError("finite monoid needs at least one element");
  if (identity < 0 || identity >= n) throw SchemaError("identity index out of range");
  if (static_cast<int>(table.size()) != n) throw SchemaError("table row count mismatch");
  std::set<std::string> seen;
  for (const auto& nm : names)
    if (nm.empty() || !seen.insert(nm).second)
      throw SchemaError("monoid element names must be nonempty and distinct");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw SchemaError("table column count mismatch");
    for (int v : row)
      if (v < 0 || v >= n) throw SchemaError("table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a)
      throw SchemaError("identity axiom fails at element '" + names[a] + "'");
    for (int b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a])
        throw SchemaError("commutativity fails at ('" + names[a] + "','" + names[b] + "')");
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw SchemaError("associativity fails at ('" + names[a] + "','" + names[b] + "','" +
                            names[c] + "')");
    }
  }
  Monoid m;
  m.kind_ = Kind::FiniteTable;
  m.names_ = std::move(names);
  m.identity_ = identity;
  m.table_ = std::move(table);
  return m;
}

Monoid Monoid::free_rank1(std::string generator) {
  if (generator.empty() || generator == "1")
    throw SchemaError("free monoid generator needs a nonempty name other than '1'");
  Monoid m;
  m.kind_ = Kind::FreeRank1;
  m.generator_ = std::move(generator);
  return m;
}

int Monoid::size() const {
  if (kind_ != Kind::FiniteTable) throw InvalidBound("free monoid has no finite size");
  return static_cast<int>(names_.size());
}

void Monoid::check_element(int e) const {
  if (e < 0 || (kind_ == Kind::FiniteTable && e >= static_cast<int>(names_.size())))
    throw SchemaError("monoid element out of range");
}

int Monoid::mul(int a, int b) const {
  check_element(a);
  check_element(b);
  return kind_ == Kind::FiniteTable ? table_[a][b] : a + b;
}

std::optional<int> Monoid::divisor_witness(int a, int b) const {
  check_element(a);
  check_element(b);
  if (kind_ == Kind::FreeRank1) {
    if (a <= b) return b - a;
    return std::nullopt;
  }
  for (int g = 0; g < static_cast<int>(names_.size()); ++g)
    if (table_[g][a] == b) return g;
  return std::nullopt;
}

bool Monoid::divides(int a, int b) const { return divisor_witness(a, b).has_value(); }

bool Monoid::is_linear() const {
  if (kind_ == Kind::FreeRank1) return true;
  const int n = static_cast<int>(names_.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!divides(a, b) && !divides(b, a)) return false;
  return true;
}

bool Monoid::is_group() const {
  if (kind_ == Kind::FreeRank1) return false;
  for (int a = 0; a < static_cast<int>(names_.size()); ++a)
    if (!divisor_witness(a, identity_)) return false;
  return true;
}

std::vector<int> Monoid::enumerate_window(int bound) const {
  if (kind_ == Kind::FiniteTable) {
    std::vector<int> all(names_.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return all;
  }
  if (bound < 0) throw InvalidBound("window bound must be nonnegative");
  std::vector<int> out(bound + 1);
  for (int i = 0; i <= bound; ++i) out[i] = i;
  return out;
}

std::string Monoid::name(int e) const {
  check_element(e);
  if (kind_ == Kind::FiniteTable) return names_[e];
  if (e == 0) return "1";
  if (e == 1) return generator_;
  return generator_ + "^" + std::to_string(e);
}

int Monoid::parse_element(const std::string& text) const {
  if (kind_ == Kind::FiniteTable) {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == text) return static_cast<int>(i);
    throw SchemaError("unknown monoid element '" + text + "'");
  }
  if (text == "1") return 0;
  if (text == generator_) return 1;
  const std::string prefix = generator_ + "^";
  if (text.rfind(prefix, 0) == 0) {
    try {
      size_t used = 0;
      int e = std::stoi(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size() && e >= 0) return e;
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("unknown monoid element '" + text + "'");
}

bool Monoid::operator==(const Monoid& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::FreeRank1) return generator_ == o.generator_;
  return names_ == o.names_ && identity_ == o.identity_ && table_ == o.table_;
}

DegreeWindow::DegreeWindow(Monoid monoid, std::vector<int> elements)
    : monoid_(std::move(monoid)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw InvalidBound("degree window is empty");
  bool has_identity = false;
  for (int e : elements_) {
    monoid_.name(e);  // range check
    if (e == monoid_.identity()) has_identity = true;
  }
  if (!has_identity) throw SchemaError("degree window misses the identity");
  /* Divisor closure: any divisor (in the whole monoid) of a window element
   * must itself be listed. */
  std::vector<int> universe = monoid_.kind() == Monoid::Kind::FiniteTable
                                  ? monoid_.enumerate_window(0)
                                  : monoid_.enumerate_window(elements_.back());
  for (int b : elements_)
    for (int a : universe)
      if (monoid_.divides(a, b) && !contains(a))
        throw SchemaError("degree window not divisor-closed: misses " + monoid_.name(a) +
                          " dividing " + monoid_.name(b));
}

DegreeWindow DegreeWindow::up_to(const Monoid& m, int bound) {
  return DegreeWindow(m, m.enumerate_window(bound));
}

bool DegreeWindow::contains(int e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::optional<int> DegreeWindow::mul(int a, int b) const {
  int p = monoid_.mul(a, b);
  if (!contains(p)) return std::nullopt;
  return p;
}

int DegreeWindow::index_of(int e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) return -1;
  return static_cast<int>(it - elements_.begin());
}

}  // namespace suspla

