#include "idemrep/semifield.hpp"

#include <algorithm>
#include <sstream>

namespace idemrep {

namespace {

void require_same_tag(const Value& a, const Value& b, const char* op) {
  if (a.tag() != b.tag()) {
    throw TagMismatch(std::string(op) + ": operands from different semifields (" +
                      to_string(a.tag()) + " vs " + to_string(b.tag()) + ")");
  }
}

}  // namespace

std::string to_string(SemifieldTag tag) {
  return tag == SemifieldTag::Boolean ? "B" : "T";
}

SemifieldTag parse_semifield_tag(const std::string& text) {
  if (text == "B" || text == "Boolean" || text == "boolean") return SemifieldTag::Boolean;
  if (text == "T" || text == "Tropical" || text == "tropical") {
    return SemifieldTag::TropicalRational;
  }
  throw ParseError("unknown semifield '" + text + "' (expected B or T)");
}

Value Value::boolean(bool bit) {
  Value v;
  v.bit_ = bit;
  return v;
}

Value Value::tropical(Rational exponent) {
  Value v;
  v.tag_ = SemifieldTag::TropicalRational;
  v.exponent_ = exponent;
  return v;
}

Value Value::tropical(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("tropical value with zero denominator");
  return tropical(Rational(num, den));
}

Value Value::neg_inf() {
  Value v;
  v.tag_ = SemifieldTag::TropicalRational;
  return v;
}

Value Value::zero(SemifieldTag tag) {
  return tag == SemifieldTag::Boolean ? boolean(false) : neg_inf();
}

Value Value::one(SemifieldTag tag) {
  return tag == SemifieldTag::Boolean ? boolean(true) : tropical(Rational(0));
}

bool Value::is_zero() const {
  return tag_ == SemifieldTag::Boolean ? !bit_ : !exponent_.has_value();
}

bool Value::is_one() const {
  return tag_ == SemifieldTag::Boolean ? bit_
                                       : exponent_.has_value() && exponent_->numerator() == 0;
}

bool Value::bit() const {
  if (tag_ != SemifieldTag::Boolean) throw TagMismatch("bit() on a tropical value");
  return bit_;
}

const Rational& Value::exponent() const {
  if (tag_ != SemifieldTag::TropicalRational) {
    throw TagMismatch("exponent() on a Boolean value");
  }
  if (!exponent_) throw ValidationError("exponent() on -inf");
  return *exponent_;
}

std::string Value::to_string() const {
  if (tag_ == SemifieldTag::Boolean) return bit_ ? "1" : "0";
  if (!exponent_) return "-inf";
  std::ostringstream os;
  os << exponent_->numerator();
  if (exponent_->denominator() != 1) os << '/' << exponent_->denominator();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

Value add(const Value& a, const Value& b) {
  require_same_tag(a, b, "add");
  if (a.tag() == SemifieldTag::Boolean) return Value::boolean(a.bit() || b.bit());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Value::tropical(std::max(a.exponent(), b.exponent()));
}

Value mul(const Value& a, const Value& b) {
  require_same_tag(a, b, "mul");
  if (a.tag() == SemifieldTag::Boolean) return Value::boolean(a.bit() && b.bit());
  if (a.is_zero() || b.is_zero()) return Value::neg_inf();
  return Value::tropical(a.exponent() + b.exponent());
}

Value inv(const Value& a) {
  if (a.is_zero()) throw ValidationError("inv: zero is not invertible");
  if (a.tag() == SemifieldTag::Boolean) return a;
  return Value::tropical(-a.exponent());
}

Value pow(const Value& a, std::uint32_t n) {
  Value result = Value::one(a.tag());
  for (std::uint32_t i = 0; i < n; ++i) result = mul(result, a);
  return result;
}

bool natural_leq(const Value& a, const Value& b) { return add(a, b) == b; }

bool check_torsion_free(const Value& a, std::uint32_t n_max) {
  if (a.is_zero()) throw ValidationError("check_torsion_free: zero is not a unit");
  if (n_max == 0) throw ValidationError("check_torsion_free: n_max must be positive");
  Value power = Value::one(a.tag());
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    power = mul(power, a);
    if (power.is_one() && !a.is_one()) return false;
  }
  return true;
}

}  // namespace idemrep
