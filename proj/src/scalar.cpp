#include "suspla/scalar.hpp"

#include <cstdlib>

namespace suspla {

Field Field::prime(uint32_t p) {
  if (p < 2) throw SchemaError("field characteristic must be a prime >= 2");
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw SchemaError("field characteristic " + std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

std::string Field::str() const {
  return kind == Kind::Rational ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.kind == Field::Kind::Rational) {
    s.rat_ = BigRat(v);
  } else {
    long long r = v % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    s.res_ = static_cast<uint32_t>(r);
  }
  return s;
}

Scalar Scalar::of_rational(BigRat v) {
  Scalar s(Field::rationals());
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::of_residue(uint32_t p, uint64_t v) {
  Scalar s(Field::prime(p));
  s.res_ = static_cast<uint32_t>(v % p);
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == Field::Kind::Rational ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == Field::Kind::Rational ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw KindMismatch(field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rational) s.rat_ = rat_ + o.rat_;
  else s.res_ = static_cast<uint32_t>((static_cast<uint64_t>(res_) + o.res_) % field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rational) s.rat_ = -rat_;
  else s.res_ = res_ == 0 ? 0 : field_.p - res_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rational) s.rat_ = rat_ * o.rat_;
  else s.res_ = static_cast<uint32_t>((static_cast<uint64_t>(res_) * o.res_) % field_.p);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ExitCode::Schema, "division by zero");
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rational) {
    s.rat_ = 1 / rat_;
  } else {
    /* Fermat: a^(p-2) mod p. */
    uint64_t base = res_, acc = 1, e = field_.p - 2;
    while (e) {
      if (e & 1) acc = acc * base % field_.p;
      base = base * base % field_.p;
      e >>= 1;
    }
    s.res_ = static_cast<uint32_t>(acc);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == Field::Kind::Rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.kind == Field::Kind::Prime) return std::to_string(res_);
  const BigInt num = boost::multiprecision::numerator(rat_);
  const BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw SchemaError("empty scalar literal");
  const auto slash = text.find('/');
  try {
    if (f.kind == Field::Kind::Rational) {
      BigInt num(slash == std::string::npos ? text : text.substr(0, slash));
      BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(text.substr(slash + 1));
      if (den == 0) throw SchemaError("zero denominator in scalar literal '" + text + "'");
      if (den < 0) { num = -num; den = -den; }
      return of_rational(BigRat(num, den));
    }
    if (slash != std::string::npos)
      throw SchemaError("fractional literal '" + text + "' over " + f.str());
    BigInt v(text);
    BigInt r = v % f.p;
    if (r < 0) r += f.p;
    return of_residue(f.p, r.convert_to<uint64_t>());
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception&) {
    throw SchemaError("unparsable scalar literal '" + text + "'");
  }
}

}  // namespace suspla
