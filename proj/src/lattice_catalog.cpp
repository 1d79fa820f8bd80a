#include "idemrep/lattice_catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace idemrep {

namespace {

constexpr std::size_t kMaxCanonicalSize = 8;
constexpr std::size_t kRandomGroundSet = 5;

}  // namespace

std::vector<std::vector<bool>> canonical_order(const FiniteBModule& m) {
  const std::size_t n = m.size();
  if (n > kMaxCanonicalSize) throw CapExceeded("canonical_order: lattice above 8 elements");
  const auto rel = m.order_relation();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<bool>> best;
  do {
    // New index i holds old element perm[i].
    std::vector<std::vector<bool>> cand(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cand[i][j] = rel[perm[i]][perm[j]];
    }
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool lattices_isomorphic(const FiniteBModule& a, const FiniteBModule& b) {
  return a.size() == b.size() && canonical_order(a) == canonical_order(b);
}

std::vector<FiniteBModule> all_small_lattices(std::size_t max_size) {
  if (max_size > 5) throw CapExceeded("all_small_lattices: only up to 5 elements");
  if (max_size == 0) return {};
  // A lattice with n elements has at most n - 1 meet-irreducibles, hence a
  // join-embedding into subsets of a set of size n - 1.
  const std::size_t ground = max_size - 1;
  const std::size_t subsets = (std::size_t{1} << ground) - 1;  // nonempty subsets
  std::set<std::pair<std::size_t, std::vector<std::vector<bool>>>> seen;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if (static_cast<std::size_t>(std::popcount(family)) + 1 > max_size) continue;
    std::vector<Bits> members{Bits(ground)};
    for (std::size_t s = 0; s < subsets; ++s) {
      if (family >> s & 1) members.push_back(Bits::from_mask(ground, s + 1));
    }
    bool closed = true;
    for (std::size_t a = 0; a < members.size() && closed; ++a) {
      for (std::size_t b = a + 1; b < members.size() && closed; ++b) {
        closed = std::find(members.begin(), members.end(), members[a] | members[b]) != members.end();
      }
    }
    if (!closed) continue;
    const auto m = FiniteBModule::from_join_closed(std::move(members));
    seen.emplace(m.size(), canonical_order(m));
  }
  std::vector<FiniteBModule> out;
  for (const auto& [size, rel] : seen) out.push_back(FiniteBModule::from_order(rel));
  return out;
}

FiniteBModule random_lattice(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size) {
  if (min_size == 0 || min_size > max_size || max_size > (std::size_t{1} << kRandomGroundSet)) {
    throw ValidationError("random_lattice: invalid size range");
  }
  for (;;) {
    const std::size_t seeds = 2 + rng() % 4;
    std::vector<Bits> gens;
    for (std::size_t i = 0; i < seeds; ++i) {
      gens.push_back(Bits::from_mask(kRandomGroundSet, rng() % (std::uint64_t{1} << kRandomGroundSet)));
    }
    const auto m = closure_module(std::move(gens), Bits(kRandomGroundSet));
    if (m.size() >= min_size && m.size() <= max_size) return FiniteBModule::from_order(m.order_relation());
  }
}

}  // namespace idemrep
