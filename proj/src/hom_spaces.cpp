#include "idemrep/hom_spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace idemrep {

namespace {

Vector boolean_vector(std::size_t n, std::uint64_t mask) {
  Vector x = Vector::zero(SemifieldTag::Boolean, n);
  for (std::size_t i = 0; i < n; ++i) x.entries[i] = Value::boolean(mask >> i & 1);
  return x;
}

}  // namespace

InvariantSubmodule invariant_vectors_basis(const Subgroup& h, const Representation& w) {
  if (!(h.group() == w.group())) throw ValidationError("invariant_vectors_basis: H is not a subgroup of G");
  InvariantSubmodule out;
  std::vector<bool> seen(w.dim(), false);
  for (Point p = 0; p < w.dim(); ++p) {
    if (seen[p]) continue;
    Vector gen = Vector::zero(w.tag(), w.dim());
    std::vector<Point> orbit;
    for (Element x : h.elements()) {
      const MonomialMap& m = w.image(x);
      const Point q = m.perm()[p];
      if (seen[q]) continue;
      seen[q] = true;
      orbit.push_back(q);
      gen.entries[q] = m.scalars()[p];
    }
    std::sort(orbit.begin(), orbit.end());
    if (!is_invariant(h, w, gen)) {
      throw std::logic_error("invariant_vectors_basis: orbit generator is not invariant");
    }
    out.orbits.push_back(std::move(orbit));
    out.generators.push_back(std::move(gen));
  }
  return out;
}

bool is_invariant(const Subgroup& h, const Representation& w, const Vector& x) {
  for (Element y : h.elements()) {
    if (!(apply(w.image(y), x) == x)) return false;
  }
  return true;
}

DoubleCosetSpace hom_descriptor_space(const IndecomposableTag& source,
                                      const IndecomposableTag& target) {
  const FiniteGroup& g = source.subgroup.group();
  if (!(g == target.subgroup.group())) throw ValidationError("hom_descriptor_space: different groups");
  return double_cosets(g, source.subgroup, target.subgroup);
}

EquivariantMap EquivariantMap::create(const Representation& source, const Representation& target,
                                      Matrix matrix) {
  if (!(source.group() == target.group())) throw ValidationError("equivariant map between different groups");
  if (source.tag() != target.tag() || matrix.tag() != source.tag()) {
    throw TagMismatch("equivariant map: mixed semifields");
  }
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw ValidationError("equivariant map: matrix shape does not match the representations");
  }
  for (Element g = 0; g < source.group().order(); ++g) {
    if (!(multiply(matrix, source.image(g).to_matrix()) ==
          multiply(target.image(g).to_matrix(), matrix))) {
      throw ValidationError("matrix does not intertwine the actions at " +
                            source.group().name_of(g));
    }
  }
  return EquivariantMap(source, target, std::move(matrix));
}

EquivariantMap identity_map(const Representation& v) {
  return EquivariantMap::create(v, v, Matrix::identity(v.tag(), v.dim()));
}

EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g) {
  if (!(g.target() == f.source())) throw ValidationError("compose: maps are not composable");
  return EquivariantMap::create(g.source(), f.target(), multiply(f.matrix(), g.matrix()));
}

EquivariantMap instantiate_hom(const HomDescriptor& d) {
  const FiniteGroup& g = d.source.subgroup.group();
  const SemifieldTag tag = d.source.character.tag();
  if (d.coefficients.size() != d.cosets.size()) {
    throw ValidationError("instantiate_hom: expected " + std::to_string(d.cosets.size()) +
                          " coefficients, one per double coset");
  }
  if (!(d.cosets.left == d.source.subgroup) || !(d.cosets.right == d.target.subgroup)) {
    throw ValidationError("instantiate_hom: double cosets do not match the tags");
  }
  for (const auto& c : d.coefficients) {
    if (c.tag() != tag) throw TagMismatch("instantiate_hom: coefficient over the wrong semifield");
  }
  const Representation v = induce_from_pair(g, tag, d.source.subgroup, d.source.character);
  const Representation w = induce_from_pair(g, tag, d.target.subgroup, d.target.character);
  // Image of the generator: sum_g a_g (g w0), w0 the line of the coset H_W.
  Vector image = Vector::zero(tag, w.dim());
  for (Element x = 0; x < g.order(); ++x) {
    const Value& a = d.coefficients[d.cosets.class_of[x]];
    const MonomialMap& m = w.image(x);
    image.entries[m.perm()[0]] = add(image.entries[m.perm()[0]], mul(a, m.scalars()[0]));
  }
  const CosetSection source_cosets = left_cosets(g, d.source.subgroup);
  Matrix matrix(tag, w.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Vector column = apply(w.image(source_cosets.representatives[i]), image);
    for (std::size_t r = 0; r < w.dim(); ++r) matrix.set(r, i, column.entries[r]);
  }
  return EquivariantMap::create(v, w, std::move(matrix));
}

std::vector<EquivariantMap> enumerate_homs_boolean(const Representation& v, const Representation& w,
                                                   std::size_t matrix_cap) {
  if (v.tag() != SemifieldTag::Boolean || w.tag() != SemifieldTag::Boolean) {
    throw ValidationError("enumerate_homs_boolean: Hom sets are only finite over B");
  }
  if (!(v.group() == w.group())) throw ValidationError("enumerate_homs_boolean: different groups");
  const FiniteGroup& g = v.group();
  std::vector<EquivariantMap> out;
  if (v.dim() > 0 && is_indecomposable(v)) {
    if (w.dim() > kMaxInvariantSearchDim) {
      throw CapExceeded("enumerate_homs_boolean: target dimension above " +
                        std::to_string(kMaxInvariantSearchDim));
    }
    const Subgroup h = stabilizer(basis_line_gset(v), 0);
    // For each basis line i of V, some x with x e_0 = e_i.
    std::vector<Element> carrier(v.dim(), 0);
    std::vector<bool> found(v.dim(), false);
    for (Element x = 0; x < g.order(); ++x) {
      const Point i = v.image(x).perm()[0];
      if (!found[i]) {
        found[i] = true;
        carrier[i] = x;
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.dim()); ++mask) {
      const Vector x = boolean_vector(w.dim(), mask);
      if (!is_invariant(h, w, x)) continue;
      Matrix matrix(SemifieldTag::Boolean, w.dim(), v.dim());
      for (std::size_t i = 0; i < v.dim(); ++i) {
        const Vector column = apply(w.image(carrier[i]), x);
        for (std::size_t r = 0; r < w.dim(); ++r) matrix.set(r, i, column.entries[r]);
      }
      out.push_back(EquivariantMap::create(v, w, std::move(matrix)));
    }
  } else {
    const std::size_t cells = v.dim() * w.dim();
    if (cells > matrix_cap) {
      throw CapExceeded("enumerate_homs_boolean: " + std::to_string(cells) +
                        " matrix entries exceed the exhaustive-search cap of " +
                        std::to_string(matrix_cap));
    }
    std::vector<Matrix> source_images, target_images;
    for (Element x = 0; x < g.order(); ++x) {
      source_images.push_back(v.image(x).to_matrix());
      target_images.push_back(w.image(x).to_matrix());
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      Matrix matrix(SemifieldTag::Boolean, w.dim(), v.dim());
      for (std::size_t c = 0; c < cells; ++c) {
        matrix.set(c / v.dim(), c % v.dim(), Value::boolean(mask >> c & 1));
      }
      bool ok = true;
      for (Element x = 0; ok && x < g.order(); ++x) {
        ok = multiply(matrix, source_images[x]) == multiply(target_images[x], matrix);
      }
      if (ok) out.push_back(EquivariantMap::create(v, w, std::move(matrix)));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EquivariantMap& a, const EquivariantMap& b) { return a.matrix() < b.matrix(); });
  return out;
}

}  // namespace idemrep
