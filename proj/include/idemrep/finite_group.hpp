#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idemrep/error.hpp"

namespace idemrep {

using Element = std::uint32_t;
using Point = std::uint32_t;
/// A bijection of {0, ..., n-1}, stored as the image of each point.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 5040;

/// (a o b)(x) = a(b(x)).
Permutation compose_permutations(const Permutation& a, const Permutation& b);
Permutation invert_permutation(const Permutation& p);
Permutation identity_permutation(std::size_t n);
bool is_permutation(const Permutation& p);
/// Cycle notation with the identity written "()".
std::string cycle_notation(const Permutation& p);

/// A finite group given by its multiplication table.
///
/// The identity is always element 0. Instances are immutable and share their
/// table, so copies are cheap and equality of two handles to the same table
/// is a pointer comparison.
class FiniteGroup {
 public:
  /// Throws ValidationError unless the table is a group with identity 0.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> names = {},
                                std::string label = {});

  std::size_t order() const { return data_->order; }
  Element mul(Element a, Element b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const { return data_->inverse[a]; }
  static constexpr Element identity() { return 0; }
  /// g x g^-1.
  Element conjugate(Element x, Element g) const { return mul(mul(g, x), inverse(g)); }
  /// Smallest k >= 1 with x^k = e.
  std::size_t element_order(Element x) const;

  const std::string& name_of(Element a) const { return data_->names[a]; }
  const std::vector<std::string>& names() const { return data_->names; }
  /// Family name such as "S3", empty for groups read from a table.
  const std::string& label() const { return data_->label; }
  std::vector<std::vector<Element>> table() const;

  /// The opposite group: same elements, a *op b = b * a.
  FiniteGroup opposite() const;

  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> names;
    std::string label;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  /// Table of a closed set of permutations; associativity holds by construction.
  static FiniteGroup from_permutations_unchecked(const std::vector<Permutation>& elements,
                                                 std::vector<std::string> names,
                                                 std::string label);

  friend FiniteGroup group_from_permutations(std::span<const Permutation>, std::size_t,
                                             std::size_t, std::string);
  friend FiniteGroup quaternion_group();

  std::shared_ptr<const Data> data_;
};

/// Closure of the generators under composition. Element 0 is the identity
/// permutation; the others are numbered in breadth-first discovery order.
FiniteGroup group_from_permutations(std::span<const Permutation> generators,
                                    std::size_t degree,
                                    std::size_t order_cap = kDefaultOrderCap,
                                    std::string label = {});

FiniteGroup quaternion_group();

/// Named families: C<n>, S<n>, D<n> (order 2n), A4, Q8, K4 / C2xC2, trivial.
FiniteGroup named_group(std::string_view name, std::size_t order_cap = kDefaultOrderCap);

/// The groups every verification suite runs over.
std::vector<std::string> zoo_group_names();

/// An element subset closed under the group operation and inversion.
class Subgroup {
 public:
  /// Validates that the elements form a subgroup of g.
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Element> elements);
  static Subgroup generated_by(const FiniteGroup& g, std::span<const Element> generators);
  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  /// Sorted ascending.
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element x) const { return member_[x]; }
  /// g H g^-1.
  Subgroup conjugate_by(Element g) const;

  std::string to_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }
  /// Orders by (size, element set).
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(FiniteGroup g, std::vector<Element> elements);

  FiniteGroup group_;
  std::vector<Element> elements_;
  std::vector<bool> member_;
};

std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
/// The conjugate of h with the lexicographically least element set.
Subgroup canonical_conjugate(const Subgroup& h);
bool are_conjugate(const Subgroup& a, const Subgroup& b);
/// One canonical representative per conjugacy class, sorted by (size, elements).
std::vector<Subgroup> subgroups_up_to_conjugacy(const FiniteGroup& g);

/// Left cosets gH with the least element of each coset as representative.
struct CosetSection {
  Subgroup subgroup;
  /// Ascending; representatives[0] == 0.
  std::vector<Element> representatives;
  /// coset_of[g] indexes representatives.
  std::vector<std::size_t> coset_of;

  std::size_t size() const { return representatives.size(); }
  /// The h in H with g = representatives[coset_of[g]] * h.
  Element residue(Element g) const;
};

CosetSection left_cosets(const FiniteGroup& g, const Subgroup& h);

/// The double cosets h1 x h2, each represented by its least element.
struct DoubleCosetSpace {
  Subgroup left;
  Subgroup right;
  /// Ascending by representative; each class is sorted.
  std::vector<std::vector<Element>> classes;
  std::vector<Element> representatives;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
};

DoubleCosetSpace double_cosets(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);

/// A finite set with a left action of a finite group.
class GSet {
 public:
  /// action is indexed [g * size + p]. Validates identity and compatibility.
  static GSet create(const FiniteGroup& g, std::size_t size, std::vector<Point> action);
  static GSet on_cosets(const FiniteGroup& g, const Subgroup& h);
  static GSet regular(const FiniteGroup& g);
  static GSet trivial(const FiniteGroup& g, std::size_t size);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return size_; }
  Point act(Element g, Point p) const { return action_[static_cast<std::size_t>(g) * size_ + p]; }

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.group_ == b.group_ && a.size_ == b.size_ && a.action_ == b.action_;
  }

 private:
  GSet(FiniteGroup g, std::size_t size, std::vector<Point> action)
      : group_(std::move(g)), size_(size), action_(std::move(action)) {}

  FiniteGroup group_;
  std::size_t size_ = 0;
  std::vector<Point> action_;
};

GSet disjoint_union(const GSet& a, const GSet& b);
/// Orbits sorted by least point, each orbit sorted.
std::vector<std::vector<Point>> orbits(const GSet& s);
Subgroup stabilizer(const GSet& s, Point point);
/// Compares the multisets of stabilizer conjugacy classes over all orbits.
bool gsets_isomorphic(const GSet& s, const GSet& t);

}  // namespace idemrep
