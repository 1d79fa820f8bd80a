#include "idemrep/config.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

#include "idemrep/json_io.hpp"

namespace idemrep {

namespace {

std::vector<std::pair<const char*, std::size_t Caps::*>> fields() {
  return {{"order_cap", &Caps::order_cap},
          {"hom_matrix_cap", &Caps::hom_matrix_cap},
          {"quasi_basis_fallback", &Caps::quasi_basis_fallback},
          {"generator_count_cap", &Caps::generator_count_cap},
          {"free_module_bits", &Caps::free_module_bits},
          {"zero_divisor_samples", &Caps::zero_divisor_samples},
          {"cyclic_generators_per_group", &Caps::cyclic_generators_per_group},
          {"random_lattices", &Caps::random_lattices}};
}

}  // namespace

Caps caps_from_json_text(const std::string& text) {
  const auto j = json_io::parse(text);
  if (!j.is_object()) throw ParseError("caps file must hold a JSON object");
  Caps caps;
  const auto known = fields();
  for (const auto& [key, value] : j.items()) {
    bool matched = false;
    for (const auto& [name, member] : known) {
      if (key != name) continue;
      if (!value.is_number_unsigned()) throw ParseError("cap \"" + key + "\" must be a nonnegative integer");
      caps.*member = value.get<std::size_t>();
      matched = true;
    }
    if (!matched) throw ParseError("unknown cap \"" + key + "\"");
  }
  return caps;
}

Caps load_caps_file(const std::string& path) { return caps_from_json_text(json_io::read_file(path).dump()); }

Caps resolve_caps(const std::optional<std::string>& explicit_path) {
  if (explicit_path) return load_caps_file(*explicit_path);
  if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') return load_caps_file(env);
  return Caps{};
}

std::string caps_to_json_text(const Caps& caps) {
  json_io::Json j = json_io::Json::object();
  for (const auto& [name, member] : fields()) j[name] = caps.*member;
  return j.dump(2);
}

}  // namespace idemrep
