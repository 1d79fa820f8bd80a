#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "idemrep/bits.hpp"
#include "idemrep/config.hpp"
#include "idemrep/oracle.hpp"

namespace idemrep {

/// Names accepted by run_verification, in run order; "all" runs every one.
std::vector<std::string> verification_suites();

/// One report per claim and instance, in a fixed order. Deterministic for a
/// given seed and caps apart from elapsed times.
std::vector<oracle::OracleReport> run_verification(const std::string& suite, std::uint64_t seed,
                                                   const Caps& caps);

/// Nonzero random elements of B[G]^k, k drawn from {1, 2}.
std::vector<std::pair<std::size_t, Bits>> random_cyclic_generators(std::size_t group_order,
                                                                   std::mt19937_64& rng,
                                                                   std::size_t count);

}  // namespace idemrep
