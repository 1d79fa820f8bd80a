#include "idemrep/bits.hpp"

#include <bit>
#include <stdexcept>

namespace idemrep {

namespace {

void require_same_width(const Bits& a, const Bits& b) {
  if (a.width() != b.width()) throw std::invalid_argument("Bits: width mismatch");
}

}  // namespace

Bits Bits::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > 64) throw std::invalid_argument("Bits::from_mask: width above 64");
  Bits b(width);
  if (width > 0) b.words_[0] = width == 64 ? mask : mask & ((std::uint64_t{1} << width) - 1);
  return b;
}

void Bits::set(std::size_t i, bool value) {
  if (i >= width_) throw std::out_of_range("Bits::set: index past width");
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= m;
  } else {
    words_[i / 64] &= ~m;
  }
}

std::size_t Bits::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bits::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Bits::subset_of(const Bits& other) const {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Bits& Bits::operator|=(const Bits& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Bits::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < width_; ++i) {
    if (!test(i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::size_t BitsHash::operator()(const Bits& b) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ b.width();
  for (auto w : b.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace idemrep
