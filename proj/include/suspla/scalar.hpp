#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "suspla/error.hpp"

namespace suspla {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* Ground field tag.  Exact rationals or a prime residue field; the two are
 * deliberately incompatible at runtime and any mixed operation throws. */
struct Field {
  enum class Kind : uint8_t { Rational, Prime };
  Kind kind = Kind::Rational;
  uint32_t p = 0;

  static Field rationals() { return {Kind::Rational, 0}; }
  static Field prime(uint32_t p);

  bool char_zero() const { return kind == Kind::Rational; }
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string str() const;
};

/* One exact field element.  Rational values are kept reduced with a positive
 * denominator (cpp_rational maintains that canonical form); prime-field
 * values live in [0, p). */
class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long v);
  static Scalar of_rational(BigRat v);
  static Scalar of_residue(uint32_t p, uint64_t v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /* Canonical text form: reduced "a/b" (or "a" for integers) over the
   * rationals, a decimal residue mod p otherwise. */
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& text);

  const BigRat& rational() const { return rat_; }
  uint32_t residue() const { return res_; }

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void require_same(const Scalar& o) const;

  Field field_;
  BigRat rat_;
  uint32_t res_ = 0;
};

}  // namespace suspla
