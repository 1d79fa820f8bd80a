#pragma once

// Hand-rolled random generators for property tests. Every generator draws
// from a caller-owned engine so each test is reproducible from its seed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "idemrep/boolean_module.hpp"
#include "idemrep/finite_group.hpp"
#include "idemrep/monomial.hpp"
#include "idemrep/semifield.hpp"

namespace idemrep::testing {

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Tropical values include -inf with probability 1/8.
inline Value random_value(std::mt19937_64& rng, SemifieldTag tag) {
  if (tag == SemifieldTag::Boolean) return Value::boolean(rng() & 1);
  if (rng() % 8 == 0) return Value::neg_inf();
  return Value::tropical(uniform(rng, -40, 40), uniform(rng, 1, 12));
}

inline Value random_unit(std::mt19937_64& rng, SemifieldTag tag) {
  if (tag == SemifieldTag::Boolean) return Value::boolean(true);
  return Value::tropical(uniform(rng, -40, 40), uniform(rng, 1, 12));
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

inline MonomialMap random_monomial(std::mt19937_64& rng, SemifieldTag tag, std::size_t n) {
  std::vector<Value> scalars;
  for (std::size_t i = 0; i < n; ++i) scalars.push_back(random_unit(rng, tag));
  return MonomialMap::create(tag, random_permutation(rng, n), std::move(scalars));
}

inline Vector random_vector(std::mt19937_64& rng, SemifieldTag tag, std::size_t n) {
  Vector v = Vector::zero(tag, n);
  for (auto& e : v.entries) e = random_value(rng, tag);
  return v;
}

/// The skip-th subgroup of the given order in all_subgroups order.
inline Subgroup subgroup_of_order(const FiniteGroup& g, std::size_t order, std::size_t skip = 0) {
  for (const auto& h : all_subgroups(g)) {
    if (h.size() == order && skip-- == 0) return h;
  }
  throw std::logic_error("no such subgroup");
}

/// A random G-stable union-closed family on a coordinate G-set of at most
/// max_width points: disjoint cosets spaces, random seeds, closed under the
/// action and then under unions.
inline BGModule random_bg_module(std::mt19937_64& rng, const FiniteGroup& g, std::size_t max_width = 8) {
  const auto subs = all_subgroups(g);
  GSet coords = GSet::on_cosets(g, subs[rng() % subs.size()]);
  while (coords.size() > max_width) coords = GSet::on_cosets(g, subs[rng() % subs.size()]);
  for (int tries = 0; tries < 3 && rng() % 2; ++tries) {
    GSet next = disjoint_union(coords, GSet::on_cosets(g, subs[rng() % subs.size()]));
    if (next.size() <= max_width) coords = next;
  }
  const std::size_t w = coords.size();
  std::vector<Bits> seeds;
  const std::size_t n_seeds = 1 + rng() % 3;
  for (std::size_t s = 0; s < n_seeds; ++s) {
    Bits b(w);
    for (std::size_t i = 0; i < w; ++i) b.set(i, rng() % 3 == 0);
    for (Element x = 0; x < g.order(); ++x) {
      Bits moved(w);
      for (std::size_t i = 0; i < w; ++i)
        if (b.test(i)) moved.set(coords.act(x, i));
      seeds.push_back(moved);
    }
  }
  return BGModule::from_coordinate_action(closure_module(std::move(seeds), Bits(w)), coords);
}

inline constexpr SemifieldTag kTags[] = {SemifieldTag::Boolean, SemifieldTag::TropicalRational};

}  // namespace idemrep::testing
