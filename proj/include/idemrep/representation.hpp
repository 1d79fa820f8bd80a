#pragma once

#include <span>
#include <vector>

#include "idemrep/finite_group.hpp"
#include "idemrep/monomial.hpp"

namespace idemrep {

/// A homomorphism from a finite group into the monomial maps of K^dim,
/// stored as one image per group element.
class Representation {
 public:
  /// Checks images[0] is the identity and images[gh] = images[g] o images[h]
  /// for every pair.
  static Representation create(const FiniteGroup& g, SemifieldTag tag, std::size_t dim,
                               std::vector<MonomialMap> images);

  const FiniteGroup& group() const { return group_; }
  SemifieldTag tag() const { return tag_; }
  std::size_t dim() const { return dim_; }
  const MonomialMap& image(Element g) const { return images_[g]; }
  const std::vector<MonomialMap>& images() const { return images_; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.group_ == b.group_ && a.tag_ == b.tag_ && a.dim_ == b.dim_ &&
           a.images_ == b.images_;
  }

 private:
  Representation(FiniteGroup g, SemifieldTag tag, std::size_t dim, std::vector<MonomialMap> images)
      : group_(std::move(g)), tag_(tag), dim_(dim), images_(std::move(images)) {}

  FiniteGroup group_;
  SemifieldTag tag_;
  std::size_t dim_;
  std::vector<MonomialMap> images_;
};

/// Extends generator images multiplicatively, then validates the result.
/// Throws when the generators do not generate g or the extension is not a
/// homomorphism.
Representation representation_from_generator_images(const FiniteGroup& g, SemifieldTag tag,
                                                     std::size_t dim,
                                                     std::span<const Element> generators,
                                                     std::span<const MonomialMap> maps);

Representation trivial_representation(const FiniteGroup& g, SemifieldTag tag, std::size_t dim);
/// K[G] acting on itself by left translation.
Representation regular_representation(const FiniteGroup& g, SemifieldTag tag);
/// Basis of v followed by basis of w.
Representation direct_sum(const Representation& v, const Representation& w);
/// The same representation written in the basis p(e_0), ..., p(e_{n-1}).
Representation change_of_basis(const Representation& v, const MonomialMap& p);

GSet basis_line_gset(const Representation& v);
/// Throws for dim 0.
bool is_indecomposable(const Representation& v);

struct Summand {
  Representation representation;
  /// Basis indices of the parent spanning this summand, ascending.
  std::vector<Point> basis;
};

/// One summand per orbit of basis lines, ordered by least basis index.
std::vector<Summand> decompose(const Representation& v);

/// A multiplicative map chi: H -> K^x.
class Character {
 public:
  /// Validates chi(e) = 1 and multiplicativity. Any nontrivial value is
  /// rejected: H is finite and K^x is torsion-free over B and T.
  static Character create(const Subgroup& h, SemifieldTag tag, std::vector<Value> values);
  static Character trivial(const Subgroup& h, SemifieldTag tag);

  const Subgroup& subgroup() const { return subgroup_; }
  SemifieldTag tag() const { return tag_; }
  /// Values parallel to subgroup().elements().
  const std::vector<Value>& values() const { return values_; }
  Value at(Element h) const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.subgroup_ == b.subgroup_ && a.tag_ == b.tag_ && a.values_ == b.values_;
  }

 private:
  Character(Subgroup h, SemifieldTag tag, std::vector<Value> values)
      : subgroup_(std::move(h)), tag_(tag), values_(std::move(values)) {}

  Subgroup subgroup_;
  SemifieldTag tag_;
  std::vector<Value> values_;
};

/// Raised when a character would need a nontrivial torsion unit.
class TorsionObstruction : public ValidationError {
 public:
  explicit TorsionObstruction(const std::string& what) : ValidationError(what) {}
};

/// The invariant (H, chi) of an indecomposable, with H the canonical
/// representative of its conjugacy class.
struct IndecomposableTag {
  Subgroup subgroup;
  Character character;

  friend bool operator==(const IndecomposableTag&, const IndecomposableTag&) = default;
};

/// Stabilizer of a basis line together with the scalars it acts by,
/// transported to the canonical conjugate. Throws if v is decomposable.
IndecomposableTag stabilizer_pair(const Representation& v, Point line);

/// The free module on G/H, g acting on the basis line tH by
/// g t = s h  =>  g(tH) = chi(h) sH.
Representation induce_from_pair(const FiniteGroup& g, SemifieldTag tag, const Subgroup& h,
                                const Character& chi);

struct ClassifiedIndecomposable {
  IndecomposableTag tag;
  Representation representation;
};

/// One indecomposable per conjugacy class of subgroups, ordered by
/// dimension and then by the canonical subgroup.
std::vector<ClassifiedIndecomposable> classify_indecomposables(const FiniteGroup& g,
                                                               SemifieldTag tag);

bool representations_isomorphic(const Representation& v, const Representation& w);

/// K[G] with g identified with gh for h in H, built by merging basis elements.
Representation quotient_of_regular_by(const FiniteGroup& g, SemifieldTag tag, const Subgroup& h);

/// The coefficients a_g, constant on left cosets of H, with
/// x = sum_g a_g (g v0) where v0 spans a line stabilized by exactly H.
std::vector<Value> coset_form(const Representation& v, const IndecomposableTag& tag,
                              const Vector& x);
/// Inverse of coset_form.
Vector from_coset_form(const Representation& v, const IndecomposableTag& tag,
                       std::span<const Value> coefficients);

/// All G-stable sets of basis lines (the subtractive G-submodules), each
/// sorted, listed by the bitmask of orbits they contain.
std::vector<std::vector<Point>> subtractive_g_submodules(const Representation& v);

}  // namespace idemrep
