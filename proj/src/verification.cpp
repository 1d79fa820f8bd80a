#include "idemrep/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "idemrep/boolean_module.hpp"
#include "idemrep/hom_spaces.hpp"
#include "idemrep/lattice_catalog.hpp"
#include "idemrep/representation.hpp"

namespace idemrep {

namespace {

using oracle::OracleReport;
using Reports = std::vector<OracleReport>;
using Clock = std::chrono::steady_clock;

/// Accumulates checks for one claim; the first failure is kept as witness.
class Claim {
 public:
  Claim(std::string claim, std::string instance)
      : report_{std::move(claim), std::move(instance), true, std::nullopt, 0, 0}, start_(Clock::now()) {}

  void check(bool ok, const std::function<std::string()>& witness) {
    ++report_.search_size;
    if (!ok && report_.pass) {
      report_.pass = false;
      report_.counterexample = witness();
    }
  }
  void add_search(std::uint64_t n) { report_.search_size += n; }

  OracleReport finish() {
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return report_;
  }

 private:
  OracleReport report_;
  Clock::time_point start_;
};

std::string dims_of(const std::vector<ClassifiedIndecomposable>& c) {
  std::string out;
  for (const auto& x : c) out += (out.empty() ? "" : ",") + std::to_string(x.representation.dim());
  return out;
}

void classification(Reports& out, const Caps& caps) {
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name, caps.order_cap);
    Claim c("classification-count", name);
    const auto classified = classify_indecomposables(g, SemifieldTag::Boolean);
    const auto expected = oracle::brute_force_subgroup_class_count(g);
    c.check(classified.size() == expected, [&] {
      return std::to_string(classified.size()) + " indecomposables vs " + std::to_string(expected) + " subgroup classes";
    });
    out.push_back(c.finish());
  }
}

void rep_gset(Reports& out, const Caps& caps) {
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name, caps.order_cap);
    const auto classified = classify_indecomposables(g, SemifieldTag::Boolean);
    Claim c("rep-gset-correspondence", name);
    for (std::size_t i = 0; i < classified.size(); ++i) {
      const auto& vi = classified[i].representation;
      const auto round = stabilizer_pair(vi, 0);
      c.check(are_conjugate(round.subgroup, classified[i].tag.subgroup),
              [&] { return "stabilizer of induced " + classified[i].tag.subgroup.to_string() + " not conjugate"; });
      for (std::size_t j = 0; j < classified.size(); ++j) {
        const auto& vj = classified[j].representation;
        const bool reps = representations_isomorphic(vi, vj);
        const GSet si = basis_line_gset(vi), sj = basis_line_gset(vj);
        const bool sets = si.size() <= oracle::kMaxGSetBijectionSize && sj.size() <= oracle::kMaxGSetBijectionSize
                              ? oracle::gsets_isomorphic_bruteforce(si, sj)
                              : gsets_isomorphic(si, sj);
        c.check(reps == sets && reps == (i == j),
                [&] { return "pair (" + std::to_string(i) + "," + std::to_string(j) + ") disagrees"; });
      }
    }
    out.push_back(c.finish());
  }
}

void hom_count(Reports& out, const Caps& caps) {
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name, caps.order_cap);
    const auto classified = classify_indecomposables(g, SemifieldTag::Boolean);
    Claim c("hom-count", name);
    for (const auto& a : classified) {
      for (const auto& b : classified) {
        const auto& v = a.representation;
        const auto& w = b.representation;
        if (v.dim() * w.dim() > 36) continue;
        const auto classes = hom_descriptor_space(a.tag, b.tag).size();
        const auto homs = enumerate_homs_boolean(v, w, caps.hom_matrix_cap);
        const std::size_t expected = std::size_t{1} << classes;
        c.check(homs.size() == expected, [&] {
          return a.tag.subgroup.to_string() + " -> " + b.tag.subgroup.to_string() + ": " +
                 std::to_string(homs.size()) + " homs, expected " + std::to_string(expected);
        });
        if (v.dim() * w.dim() <= caps.hom_matrix_cap) {
          const auto brute = oracle::enumerate_equivariant_maps(v, w, caps.hom_matrix_cap);
          c.check(brute.size() == homs.size(), [&] {
            return a.tag.subgroup.to_string() + " -> " + b.tag.subgroup.to_string() + ": oracle found " +
                   std::to_string(brute.size());
          });
        }
      }
    }
    out.push_back(c.finish());
  }
}

void divisibility(Reports& out, const Caps& caps) {
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name, caps.order_cap);
    Claim c("dimension-divides-order", name);
    for (const auto& x : classify_indecomposables(g, SemifieldTag::Boolean)) {
      c.check(g.order() % x.representation.dim() == 0,
              [&] { return "dim " + std::to_string(x.representation.dim()); });
    }
    out.push_back(c.finish());
  }
}

void general_linear(Reports& out) {
  for (std::size_t n = 1; n <= oracle::kMaxInvertibleSearchDim; ++n) {
    Claim c("invertible-iff-monomial", "n=" + std::to_string(n));
    const auto invertible = oracle::enumerate_invertible_matrices(n);
    std::set<oracle::BoolMatrix> oracle_set(invertible.begin(), invertible.end());
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) factorial *= k;
    c.check(invertible.size() == factorial,
            [&] { return std::to_string(invertible.size()) + " invertible, expected " + std::to_string(factorial); });
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << (n * n)); ++p) {
      Matrix m(SemifieldTag::Boolean, n, n);
      oracle::BoolMatrix raw(n, std::vector<bool>(n));
      for (std::size_t k = 0; k < n * n; ++k) {
        m.set(k / n, k % n, Value::boolean(p >> k & 1));
        raw[k / n][k % n] = p >> k & 1;
      }
      const bool monomial = recognize_monomial(m).has_value();
      c.check(monomial == oracle_set.contains(raw), [&] { return oracle::to_string(raw); });
    }
    out.push_back(c.finish());
  }
}

void duality(Reports& out, std::uint64_t seed, const Caps& caps) {
  std::vector<FiniteBModule> suite = all_small_lattices(5);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < caps.random_lattices; ++i) suite.push_back(random_lattice(rng, 6, 8));
  Claim psi_claim("dual-order-reversing", std::to_string(suite.size()) + " lattices");
  Claim reflexive("double-dual-isomorphism", std::to_string(suite.size()) + " lattices");
  Claim hom_count_claim("hom-to-B-count", std::to_string(suite.size()) + " lattices");
  const FiniteBModule b = named_lattice("B");
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const auto& m = suite[idx];
    const auto tag = [&] { return "lattice " + std::to_string(idx) + " of size " + std::to_string(m.size()); };
    const DualModule d = dual(m);
    bool reversing = d.module.size() == m.size();
    for (std::size_t x = 0; x < m.size() && reversing; ++x) {
      for (std::size_t y = 0; y < m.size() && reversing; ++y) {
        reversing = m.leq(x, y) == d.module.leq(d.psi[y], d.psi[x]);
      }
    }
    std::vector<std::size_t> psi = d.psi;
    std::sort(psi.begin(), psi.end());
    reversing = reversing && std::adjacent_find(psi.begin(), psi.end()) == psi.end();
    psi_claim.check(reversing, tag);
    reflexive.check(double_dual_canonical(m).is_isomorphism(), tag);
    const auto homs = oracle::enumerate_all_module_homs(m, b);
    hom_count_claim.add_search(homs.candidates);
    hom_count_claim.check(homs.homs.size() == m.size() && d.module.size() == m.size(), tag);
  }
  out.push_back(psi_claim.finish());
  out.push_back(reflexive.finish());
  out.push_back(hom_count_claim.finish());
}

void cyclic_modules(Reports& out, std::uint64_t seed, const Caps& caps) {
  std::uint64_t group_seed = seed;
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name, caps.order_cap);
    std::mt19937_64 rng(group_seed++);
    Claim quasi("cyclic-quasi-free", name);
    Claim antichain("orbit-antichain", name);
    Claim chain_bound("chain-bound", name);
    Claim embedding("regular-embedding", name);
    for (const auto& [k, gen] : random_cyclic_generators(g.order(), rng, caps.cyclic_generators_per_group)) {
      const BGModule m = cyclic_submodule_of_free(g, k, gen);
      const auto witness = [&, k = k, gen = gen] { return "k=" + std::to_string(k) + " generator " + gen.to_string(); };
      const std::size_t generator = *m.module().index_of(gen);
      const std::size_t index = g.order() / element_stabilizer(m, generator).size();
      const auto result = quasi_basis_search(m.module(), caps.quasi_basis_fallback);
      const auto* basis = std::get_if<QuasiBasis>(&result);
      quasi.check(basis != nullptr && basis->rank() == index, witness);
      antichain.check(orbit_antichain_check(m).holds, witness);
      chain_bound.check(max_chain_length_join_irreducibles(m) <= generator_count(m, caps.generator_count_cap),
                        witness);
      embedding.check(verify_embedding(m, embed_into_regular_power(m)).ok(), witness);
    }
    out.push_back(quasi.finish());
    out.push_back(antichain.finish());
    out.push_back(chain_bound.finish());
    out.push_back(embedding.finish());
  }
}

void torsion(Reports& out, std::uint64_t seed) {
  auto r = oracle::tropical_torsion_scan(seed, 1000, 12);
  // The structural check must agree on the same kind of inputs.
  std::mt19937_64 rng(seed + 1);
  for (int i = 0; i < 1000 && r.pass; ++i) {
    const std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 97);
    const Value a = Value::tropical(num, den);
    ++r.search_size;
    if (!check_torsion_free(a, 12)) {
      r.pass = false;
      r.counterexample = "check_torsion_free rejects " + a.to_string();
    }
  }
  out.push_back(r);
}

void zero_divisors(Reports& out, std::uint64_t seed, const Caps& caps) {
  std::uint64_t s = seed;
  for (const auto& name : zoo_group_names()) {
    out.push_back(oracle::exhaustive_zero_divisor_scan(named_group(name, caps.order_cap), s++,
                                                       caps.zero_divisor_samples));
  }
}

void fixed_points(Reports& out, const Caps& caps) {
  {
    Claim c("fixed-point", "S3 dims");
    const auto classified = classify_indecomposables(named_group("S3", caps.order_cap), SemifieldTag::Boolean);
    c.check(dims_of(classified) == "1,2,3,6", [&] { return dims_of(classified); });
    out.push_back(c.finish());
  }
  {
    Claim c("fixed-point", "C2 hom-table");
    const auto classified = classify_indecomposables(named_group("C2", caps.order_cap), SemifieldTag::Boolean);
    std::vector<std::vector<std::size_t>> table;
    for (const auto& a : classified) {
      table.emplace_back();
      for (const auto& b : classified) table.back().push_back(hom_descriptor_space(a.tag, b.tag).size());
    }
    const std::vector<std::vector<std::size_t>> expected{{1, 1}, {1, 2}};
    c.check(table == expected, [] { return std::string("table differs from [[1,1],[1,2]]"); });
    out.push_back(c.finish());
  }
  for (const auto& [lattice, expected] :
       std::vector<std::pair<std::string, std::string>>{{"N5", "c = a + c"}, {"chain3", "b = a + b"}}) {
    Claim c("fixed-point", lattice + " not quasi-free");
    const auto result = quasi_basis_search(named_lattice(lattice), caps.quasi_basis_fallback);
    const auto* nq = std::get_if<NotQuasiFree>(&result);
    c.check(nq != nullptr && nq->witness == expected,
            [&] { return nq ? nq->witness : std::string("reported quasi-free"); });
    out.push_back(c.finish());
  }
}

}  // namespace

std::vector<std::pair<std::size_t, Bits>> random_cyclic_generators(std::size_t group_order, std::mt19937_64& rng,
                                                                   std::size_t count) {
  std::vector<std::pair<std::size_t, Bits>> out;
  while (out.size() < count) {
    const std::size_t k = 1 + rng() % 2;
    Bits b(k * group_order);
    for (std::size_t i = 0; i < b.width(); ++i) b.set(i, rng() & 1);
    if (!b.none()) out.emplace_back(k, std::move(b));
  }
  return out;
}

std::vector<std::string> verification_suites() {
  return {"classification", "rep-gset", "hom-count", "divisibility", "gl", "duality",
          "cyclic", "torsion", "zero-divisors", "fixed-points"};
}

std::vector<OracleReport> run_verification(const std::string& suite, std::uint64_t seed, const Caps& caps) {
  const auto names = verification_suites();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw ParseError("unknown verification suite '" + suite + "'");
  }
  const auto wanted = [&](const char* s) { return suite == "all" || suite == s; };
  Reports out;
  if (wanted("classification")) classification(out, caps);
  if (wanted("rep-gset")) rep_gset(out, caps);
  if (wanted("hom-count")) hom_count(out, caps);
  if (wanted("divisibility")) divisibility(out, caps);
  if (wanted("gl")) general_linear(out);
  if (wanted("duality")) duality(out, seed, caps);
  if (wanted("cyclic")) cyclic_modules(out, seed, caps);
  if (wanted("torsion")) torsion(out, seed);
  if (wanted("zero-divisors")) zero_divisors(out, seed, caps);
  if (wanted("fixed-points")) fixed_points(out, caps);
  return out;
}

}  // namespace idemrep
