#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

#include "idemrep/error.hpp"

namespace idemrep {

/// The two idempotent semifields the library works over.
enum class SemifieldTag : std::uint8_t { Boolean, TropicalRational };

using Rational = boost::rational<std::int64_t>;

std::string to_string(SemifieldTag tag);
/// Accepts "B"/"Boolean" and "T"/"Tropical".
SemifieldTag parse_semifield_tag(const std::string& text);

/// Raised when two operands belong to different semifields.
class TagMismatch : public ValidationError {
 public:
  explicit TagMismatch(const std::string& what) : ValidationError(what) {}
};

/// An element of B or of the max-plus semifield over the rationals.
///
/// Tropical values store their exponent exactly; the bottom element (the
/// semifield zero, written -inf) is the absence of an exponent rather than a
/// sentinel number, so absorption is structural.
class Value {
 public:
  /// Boolean zero.
  Value() = default;

  static Value boolean(bool bit);
  static Value tropical(Rational exponent);
  static Value tropical(std::int64_t num, std::int64_t den = 1);
  static Value neg_inf();
  static Value zero(SemifieldTag tag);
  static Value one(SemifieldTag tag);

  SemifieldTag tag() const { return tag_; }
  bool is_zero() const;
  bool is_one() const;

  /// Boolean payload. Throws TagMismatch on tropical values.
  bool bit() const;
  /// Tropical exponent. Throws on Boolean values and on -inf.
  const Rational& exponent() const;

  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  SemifieldTag tag_ = SemifieldTag::Boolean;
  bool bit_ = false;
  std::optional<Rational> exponent_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

Value add(const Value& a, const Value& b);
Value mul(const Value& a, const Value& b);
/// Multiplicative inverse of a nonzero value.
Value inv(const Value& a);
/// a^n for n >= 0 (a^0 = 1).
Value pow(const Value& a, std::uint32_t n);
/// a <= b in the natural order, i.e. a + b == b.
bool natural_leq(const Value& a, const Value& b);

/// True iff a^n = 1 implies a = 1 for every 1 <= n <= n_max.
bool check_torsion_free(const Value& a, std::uint32_t n_max);

inline Value operator+(const Value& a, const Value& b) { return add(a, b); }
inline Value operator*(const Value& a, const Value& b) { return mul(a, b); }

}  // namespace idemrep
