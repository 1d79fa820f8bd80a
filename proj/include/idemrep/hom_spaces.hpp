#pragma once

#include <vector>

#include "idemrep/representation.hpp"

namespace idemrep {

inline constexpr std::size_t kDefaultHomMatrixCap = 20;
inline constexpr std::size_t kMaxInvariantSearchDim = 24;

/// Generators of the H-invariant elements of a representation.
struct InvariantSubmodule {
  /// H-orbits on the basis lines, sorted by least point.
  std::vector<std::vector<Point>> orbits;
  /// One generator per orbit: the orbit sum, each basis vector weighted by
  /// the unit that carries the orbit's least line onto it (all 1 over B).
  std::vector<Vector> generators;
};

/// Every H-invariant element is a combination of the generators.
InvariantSubmodule invariant_vectors_basis(const Subgroup& h, const Representation& w);
bool is_invariant(const Subgroup& h, const Representation& w, const Vector& x);

/// The double cosets H_V \ G / H_W indexing Hom(V, W). The left factor is the
/// source subgroup; g -> g^-1 carries this indexing to H_W \ G / H_V.
DoubleCosetSpace hom_descriptor_space(const IndecomposableTag& source,
                                      const IndecomposableTag& target);

/// A hom between the induced indecomposables of `source` and `target`,
/// given by one coefficient per double coset.
struct HomDescriptor {
  IndecomposableTag source;
  IndecomposableTag target;
  DoubleCosetSpace cosets;
  /// Parallel to cosets.representatives.
  std::vector<Value> coefficients;
};

/// A module map intertwining the two actions.
class EquivariantMap {
 public:
  /// Validates matrix * source(g) == target(g) * matrix for every g.
  static EquivariantMap create(const Representation& source, const Representation& target,
                               Matrix matrix);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  Vector operator()(const Vector& x) const { return multiply(matrix_, x); }

 private:
  EquivariantMap(Representation source, Representation target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  Representation source_;
  Representation target_;
  Matrix matrix_;
};

EquivariantMap identity_map(const Representation& v);
/// x -> f(g(x)).
EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g);

/// Sends the generator of V to sum_g a(H_V g H_W) g w0 and extends
/// equivariantly. Throws if a coefficient is missing.
EquivariantMap instantiate_hom(const HomDescriptor& d);

/// All equivariant maps V -> W over B, in matrix order. Uses H_V-invariant
/// elements of W when V is indecomposable, exhaustive matrix search otherwise.
std::vector<EquivariantMap> enumerate_homs_boolean(const Representation& v, const Representation& w,
                                                   std::size_t matrix_cap = kDefaultHomMatrixCap);

}  // namespace idemrep
