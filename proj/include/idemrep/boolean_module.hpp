#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "idemrep/bits.hpp"
#include "idemrep/finite_group.hpp"

namespace idemrep {

class BGModule;

inline constexpr std::size_t kDefaultQuasiBasisFallback = 16;
inline constexpr std::size_t kDefaultGeneratorCountCap = 12;
inline constexpr std::size_t kDefaultFreeModuleBits = 16;

/// A finite B-module, i.e. a finite lattice under x <= y iff x + y = y.
///
/// Elements are indices. Each element carries a bitset and the family of
/// bitsets is closed under union, so join is union and the order is
/// inclusion. This is a join-embedding into a Boolean cube, not an extra
/// assumption: every finite lattice has one.
class FiniteBModule {
 public:
  /// leq[a][b] says a <= b. Validates a partial order with a least element
  /// and a least upper bound for every pair. Default labels are the indices.
  static FiniteBModule from_order(const std::vector<std::vector<bool>>& leq,
                                  std::vector<std::string> labels = {});
  /// The family must be union-closed with a least member and no repeats.
  /// Default labels are the set notation of the bitsets.
  static FiniteBModule from_join_closed(std::vector<Bits> family,
                                        std::vector<std::string> labels = {});

  std::size_t size() const { return data_->bits.size(); }
  std::size_t width() const { return data_->width; }
  std::size_t bottom() const { return data_->bottom; }
  std::size_t top() const { return data_->top; }
  bool leq(std::size_t a, std::size_t b) const { return data_->bits[a].subset_of(data_->bits[b]); }
  std::size_t join(std::size_t a, std::size_t b) const;
  const Bits& bits(std::size_t a) const { return data_->bits[a]; }
  std::optional<std::size_t> index_of(const Bits& b) const;
  const std::string& label(std::size_t a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::vector<std::vector<bool>> order_relation() const;
  /// A join-generating set of indices, ascending.
  const std::vector<std::size_t>& generators() const { return data_->generators; }

  /// Same size, same order relation and same labels.
  friend bool operator==(const FiniteBModule& a, const FiniteBModule& b);

 private:
  struct Data {
    std::size_t width = 0;
    std::vector<Bits> bits;
    std::vector<std::string> labels;
    std::unordered_map<Bits, std::size_t, BitsHash> index;
    std::size_t bottom = 0;
    std::size_t top = 0;
    /// Indices whose joins give every element; contains all join-irreducibles.
    std::vector<std::size_t> generators;
  };
  explicit FiniteBModule(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  /// Caller guarantees a union-closed family of distinct sets with a least
  /// member, and that `generators` (all elements if empty) join-generate it.
  static FiniteBModule trusted(std::vector<Bits> family, std::vector<std::string> labels,
                               std::vector<std::size_t> generators = {});

  friend class BGModule;
  friend BGModule cyclic_bg_module(const BGModule&, std::size_t);
  friend FiniteBModule closure_module(std::vector<Bits> seeds, const Bits& bottom);

  std::shared_ptr<const Data> data_;
};

/// Union closure of the seeds together with `bottom`, sorted by
/// (cardinality, bitset).
FiniteBModule closure_module(std::vector<Bits> seeds, const Bits& bottom);

FiniteBModule boolean_cube(std::size_t n);
/// 0 < a < b < ... with k elements.
FiniteBModule chain(std::size_t k);
/// B, diamond, N5, M3, chain<k>, cube<n>. N5 is 0 < a < c < 1, 0 < b < 1,
/// indexed 0, a, b, c, 1.
FiniteBModule named_lattice(std::string_view name);

/// The dual with psi(x) the hom y -> [y not <= x]. Over B every hom to B
/// has this form, so |dual| = |M|.
struct DualModule {
  FiniteBModule module;
  /// psi[x] indexes module; a <= b iff psi[b] <= psi[a].
  std::vector<std::size_t> psi;
};

DualModule dual(const FiniteBModule& m);

/// The evaluation map x -> (phi -> phi(x)) into the double dual.
struct DoubleDual {
  FiniteBModule double_dual;
  std::vector<std::size_t> eval;
  bool injective = false;
  bool surjective = false;
  bool preserves_join = false;

  /// Reflexive.
  bool is_isomorphism() const { return injective && surjective && preserves_join; }
  /// Weakly reflexive.
  bool is_monomorphism() const { return injective && preserves_join; }
};

DoubleDual double_dual_canonical(const FiniteBModule& m);

/// Nonzero elements that are not the join of two strictly smaller ones, ascending.
std::vector<std::size_t> join_irreducibles(const FiniteBModule& m);
/// Non-top elements with exactly one upper cover, ascending.
std::vector<std::size_t> meet_irreducibles(const FiniteBModule& m);
/// Number of elements in a longest chain of join-irreducibles.
std::size_t max_chain_length_join_irreducibles(const FiniteBModule& m);
/// Every element is a join of atoms.
bool is_atomistic(const FiniteBModule& m);

struct QuasiBasis {
  std::vector<std::size_t> elements;
  std::size_t rank() const { return elements.size(); }
};

/// A violated quasi-independence: lhs equals the join of rhs, rhs != {lhs}.
struct NotQuasiFree {
  std::size_t lhs = 0;
  std::vector<std::size_t> rhs;
  /// Rendered with labels, e.g. "c = a + c".
  std::string witness;
};

/// Join-irreducibles lie in every generating set, so the module is quasi-free
/// iff they form an antichain. Modules of at most `fallback_cap` elements are
/// re-checked by exhaustive search over generating sets.
std::variant<QuasiBasis, NotQuasiFree> quasi_basis_search(
    const FiniteBModule& m, std::size_t fallback_cap = kDefaultQuasiBasisFallback);

/// A finite B-module with G acting by join-preserving bijections.
class BGModule {
 public:
  /// action is indexed [g * size + x]. Validates the group law, bijectivity,
  /// and preservation of bottom and joins.
  static BGModule create(FiniteBModule m, FiniteGroup g, std::vector<std::size_t> action);
  /// G permutes the bitset coordinates; joins are preserved by construction.
  /// Throws if the family is not stable under the permutation.
  static BGModule from_coordinate_action(FiniteBModule m, const GSet& coordinates);
  static BGModule trivial_action(FiniteBModule m, FiniteGroup g);

  const FiniteBModule& module() const { return module_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t act(Element g, std::size_t x) const {
    return action_[static_cast<std::size_t>(g) * module_.size() + x];
  }
  const std::vector<std::size_t>& action() const { return action_; }

 private:
  BGModule(FiniteBModule m, FiniteGroup g, std::vector<std::size_t> action)
      : module_(std::move(m)), group_(std::move(g)), action_(std::move(action)) {}

  friend BGModule cyclic_bg_module(const BGModule&, std::size_t);

  FiniteBModule module_;
  FiniteGroup group_;
  std::vector<std::size_t> action_;
};

/// k copies of G; coordinate (i, h) is i * |G| + h and g sends it to (i, gh).
GSet regular_power_gset(const FiniteGroup& g, std::size_t k);
/// B[G]^k with every subset materialized; throws CapExceeded past max_bits coordinates.
BGModule free_module(const FiniteGroup& g, std::size_t k, std::size_t max_bits = kDefaultFreeModuleBits);
/// The B[G]-submodule generated by one element, with the inherited action.
BGModule cyclic_bg_module(const BGModule& m, std::size_t generator);
/// The same inside B[G]^k without materializing B[G]^k.
BGModule cyclic_submodule_of_free(const FiniteGroup& g, std::size_t k, const Bits& generator);
Subgroup element_stabilizer(const BGModule& m, std::size_t x);
/// The dual as a left module over the opposite group: (g . phi)(x) = phi(g x).
BGModule dual_bg_module(const BGModule& m);

struct AntichainCheck {
  bool holds = true;
  /// Two comparable members of one orbit, smaller first.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

AntichainCheck orbit_antichain_check(const BGModule& m);
std::size_t max_chain_length_join_irreducibles(const BGModule& m);
/// Least number of elements generating m under the action and joins, by
/// search over subsets of join-irreducibles. Throws for the zero module and
/// past `cap` join-irreducibles.
std::size_t generator_count(const BGModule& m, std::size_t cap = kDefaultGeneratorCountCap);

/// x -> ([h^-1 x not <= m_i])_(i, h) into B[G]^copies, where the m_i are
/// representatives of the G-orbits of meet-irreducibles. Their homs
/// y -> [y not <= m_i] generate the dual over the opposite group, so this is
/// the dual of the resulting free presentation of the dual.
struct RegularEmbedding {
  FiniteGroup group;
  std::size_t copies = 0;
  std::vector<std::size_t> meet_irreducible_representatives;
  /// Indexed by module element; width copies * |G|.
  std::vector<Bits> images;
};

RegularEmbedding embed_into_regular_power(const BGModule& m);

struct EmbeddingCheck {
  bool injective = false;
  bool equivariant = false;
  bool preserves_join = false;
  bool ok() const { return injective && equivariant && preserves_join; }
};

EmbeddingCheck verify_embedding(const BGModule& m, const RegularEmbedding& e);

}  // namespace idemrep
