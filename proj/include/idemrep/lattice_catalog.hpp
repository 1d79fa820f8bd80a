#pragma once

#include <random>
#include <vector>

#include "idemrep/boolean_module.hpp"

namespace idemrep {

/// Order relation of m relabeled to its lexicographically least form.
/// Exhaustive over relabelings, so only for small lattices.
std::vector<std::vector<bool>> canonical_order(const FiniteBModule& m);
bool lattices_isomorphic(const FiniteBModule& a, const FiniteBModule& b);

/// One lattice per isomorphism class with at most max_size <= 5 elements,
/// by increasing size, each in canonical labeling.
std::vector<FiniteBModule> all_small_lattices(std::size_t max_size = 5);

/// A lattice with between min_size and max_size elements, drawn as the
/// union closure of random subsets and rebuilt from its order relation.
FiniteBModule random_lattice(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size);

}  // namespace idemrep
