#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idemrep/boolean_module.hpp"
#include "idemrep/finite_group.hpp"
#include "idemrep/representation.hpp"

// Brute-force checkers. Nothing here calls the structural algorithms they are
// compared against: inputs are read as raw tables and every search is plain
// enumeration.

namespace idemrep::oracle {

inline constexpr std::size_t kMaxInvertibleSearchDim = 3;
inline constexpr std::size_t kMaxEquivariantCells = 20;
inline constexpr std::uint64_t kMaxModuleHomCandidates = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxSubgroupSearchOrder = 16;
inline constexpr std::size_t kMaxGSetBijectionSize = 8;
inline constexpr std::size_t kZeroDivisorSamples = 10000;

/// Entry [r][c].
using BoolMatrix = std::vector<std::vector<bool>>;

struct OracleReport {
  std::string claim;
  std::string instance;
  bool pass = true;
  /// Present exactly when pass is false.
  std::optional<std::string> counterexample;
  std::uint64_t search_size = 0;
  double elapsed_ms = 0;
};

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

/// n x n Boolean matrices having a two-sided inverse, ascending by row-major
/// bit pattern. Throws CapExceeded for n > 3.
std::vector<BoolMatrix> enumerate_invertible_matrices(std::size_t n);

/// Every M with M v(g) = w(g) M for all g, by trying all 2^(dim v * dim w)
/// candidates. Boolean representations only.
std::vector<BoolMatrix> enumerate_equivariant_maps(const Representation& v, const Representation& w,
                                                   std::size_t cell_cap = kMaxEquivariantCells);

/// All maps m -> n (as element tables) preserving zero and joins, with joins
/// recomputed from the order relations.
struct ModuleHoms {
  std::uint64_t candidates = 0;
  std::vector<std::vector<std::size_t>> homs;
};

ModuleHoms enumerate_all_module_homs(const FiniteBModule& m, const FiniteBModule& n,
                                     std::uint64_t candidate_cap = kMaxModuleHomCandidates);

/// Nonzero products of nonzero elements of B[G]. Exhaustive for |G| <= 3,
/// otherwise `samples` random pairs drawn from `seed`.
OracleReport exhaustive_zero_divisor_scan(const FiniteGroup& g, std::uint64_t seed,
                                          std::size_t samples = kZeroDivisorSamples);

/// a^n = 1 forces a = 1 for n <= n_max over `count` random rationals.
OracleReport tropical_torsion_scan(std::uint64_t seed, std::size_t count, int n_max);

/// Conjugacy classes of subgroups from all element subsets.
std::size_t brute_force_subgroup_class_count(const FiniteGroup& g);

/// Tries every bijection.
bool gsets_isomorphic_bruteforce(const GSet& s, const GSet& t);

/// Extracts the Boolean matrix of a monomial map without using Matrix.
BoolMatrix raw_matrix(const MonomialMap& m);

std::string to_string(const BoolMatrix& m);

}  // namespace idemrep::oracle
