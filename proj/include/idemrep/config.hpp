#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace idemrep {

/// Search budgets. Every field has a default and may be overridden by a caps
/// file: a JSON object with any subset of these keys.
struct Caps {
  std::size_t order_cap = 5040;
  std::size_t hom_matrix_cap = 20;
  std::size_t quasi_basis_fallback = 16;
  std::size_t generator_count_cap = 12;
  std::size_t free_module_bits = 16;
  std::size_t zero_divisor_samples = 10000;
  std::size_t cyclic_generators_per_group = 100;
  std::size_t random_lattices = 40;

  friend bool operator==(const Caps&, const Caps&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr const char* kConfigEnvVar = "IDEMREP_CONFIG";

/// Throws ParseError on unknown keys or non-integer values.
Caps caps_from_json_text(const std::string& text);
Caps load_caps_file(const std::string& path);
/// The explicit path if given, else the file named by IDEMREP_CONFIG, else defaults.
Caps resolve_caps(const std::optional<std::string>& explicit_path);
std::string caps_to_json_text(const Caps& caps);

}  // namespace idemrep
