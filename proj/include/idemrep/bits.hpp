#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace idemrep {

/// A fixed-width bitset with runtime width. Bits past the width stay zero,
/// so word-wise comparison and hashing are exact.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}
  /// The low `width` bits of mask; width <= 64.
  static Bits from_mask(std::size_t width, std::uint64_t mask);

  std::size_t width() const { return width_; }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  void set(std::size_t i, bool value = true);
  std::size_t count() const;
  bool none() const;
  bool subset_of(const Bits& other) const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  Bits& operator|=(const Bits& other);
  Bits& operator&=(const Bits& other);
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  friend bool operator==(const Bits&, const Bits&) = default;
  /// Width first, then the words from most significant downwards.
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b);

  /// Set notation of the members, e.g. "{0,3}".
  std::string to_string() const;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept;
};

}  // namespace idemrep
