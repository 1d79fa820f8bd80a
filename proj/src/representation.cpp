#include "idemrep/representation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace idemrep {

namespace {

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* where) {
  if (!(a == b)) throw ValidationError(std::string(where) + ": objects over different groups");
}

/// A basis line of v whose stabilizer is exactly h.
Point line_with_stabilizer(const Representation& v, const Subgroup& h) {
  GSet lines = basis_line_gset(v);
  for (Point j = 0; j < lines.size(); ++j) {
    if (stabilizer(lines, j) == h) return j;
  }
  throw ValidationError("no basis line is stabilized by " + h.to_string() +
                        "; representation does not have this type");
}

}  // namespace

Representation Representation::create(const FiniteGroup& g, SemifieldTag tag, std::size_t dim,
                                      std::vector<MonomialMap> images) {
  if (images.size() != g.order()) {
    throw ValidationError("representation needs one image per group element");
  }
  for (const auto& m : images) {
    if (m.dim() != dim) throw ValidationError("representation image has the wrong dimension");
    if (m.tag() != tag) throw TagMismatch("representation image over the wrong semifield");
  }
  if (!(images[0] == MonomialMap::identity(tag, dim))) {
    throw ValidationError("representation does not send the identity to the identity map");
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (!(compose(images[a], images[b]) == images[g.mul(a, b)])) {
        throw ValidationError("not a homomorphism: image(" + g.name_of(a) + " * " +
                              g.name_of(b) + ") != image(" + g.name_of(a) + ") o image(" +
                              g.name_of(b) + ")");
      }
  return Representation(g, tag, dim, std::move(images));
}

Representation representation_from_generator_images(const FiniteGroup& g, SemifieldTag tag,
                                                     std::size_t dim,
                                                     std::span<const Element> generators,
                                                     std::span<const MonomialMap> maps) {
  if (generators.size() != maps.size()) {
    throw ValidationError("one map is needed per generator");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (generators[i] >= g.order()) throw ValidationError("generator out of range");
    if (maps[i].dim() != dim || maps[i].tag() != tag) {
      throw ValidationError("generator image has the wrong dimension or semifield");
    }
  }
  std::vector<std::optional<MonomialMap>> images(g.order());
  images[0] = MonomialMap::identity(tag, dim);
  std::vector<Element> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Element y = g.mul(generators[i], x);
      if (!images[y]) {
        images[y] = compose(maps[i], *images[x]);
        queue.push_back(y);
      }
    }
  }
  std::vector<MonomialMap> dense;
  dense.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (!images[x]) throw ValidationError("generators do not generate the group");
    dense.push_back(*images[x]);
  }
  return Representation::create(g, tag, dim, std::move(dense));
}

Representation trivial_representation(const FiniteGroup& g, SemifieldTag tag, std::size_t dim) {
  return Representation::create(g, tag, dim,
                                std::vector<MonomialMap>(g.order(), MonomialMap::identity(tag, dim)));
}

Representation regular_representation(const FiniteGroup& g, SemifieldTag tag) {
  std::vector<MonomialMap> images;
  images.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    Permutation p(g.order());
    for (Element x = 0; x < g.order(); ++x) p[x] = g.mul(a, x);
    images.push_back(MonomialMap::permutation(tag, std::move(p)));
  }
  return Representation::create(g, tag, g.order(), std::move(images));
}

Representation direct_sum(const Representation& v, const Representation& w) {
  require_same_group(v.group(), w.group(), "direct_sum");
  if (v.tag() != w.tag()) throw TagMismatch("direct_sum: mixed semifields");
  const std::size_t n = v.dim() + w.dim();
  std::vector<MonomialMap> images;
  for (Element a = 0; a < v.group().order(); ++a) {
    Permutation p(n);
    std::vector<Value> s;
    s.reserve(n);
    for (std::size_t j = 0; j < v.dim(); ++j) {
      p[j] = v.image(a).perm()[j];
      s.push_back(v.image(a).scalars()[j]);
    }
    for (std::size_t j = 0; j < w.dim(); ++j) {
      p[v.dim() + j] = static_cast<std::uint32_t>(v.dim() + w.image(a).perm()[j]);
      s.push_back(w.image(a).scalars()[j]);
    }
    images.push_back(MonomialMap::create(v.tag(), std::move(p), std::move(s)));
  }
  return Representation::create(v.group(), v.tag(), n, std::move(images));
}

Representation change_of_basis(const Representation& v, const MonomialMap& p) {
  if (p.dim() != v.dim() || p.tag() != v.tag()) {
    throw ValidationError("change_of_basis: map does not match the representation");
  }
  const MonomialMap p_inv = invert(p);
  std::vector<MonomialMap> images;
  for (const auto& m : v.images()) images.push_back(compose(p_inv, compose(m, p)));
  return Representation::create(v.group(), v.tag(), v.dim(), std::move(images));
}

GSet basis_line_gset(const Representation& v) {
  const std::size_t n = v.dim();
  std::vector<Point> action(v.group().order() * n);
  for (Element a = 0; a < v.group().order(); ++a) {
    const Permutation& p = basis_line_permutation(v.image(a));
    std::copy(p.begin(), p.end(), action.begin() + static_cast<std::ptrdiff_t>(a * n));
  }
  return GSet::create(v.group(), n, std::move(action));
}

bool is_indecomposable(const Representation& v) {
  if (v.dim() == 0) throw ValidationError("is_indecomposable: zero-dimensional representation");
  return orbits(basis_line_gset(v)).size() == 1;
}

std::vector<Summand> decompose(const Representation& v) {
  std::vector<Summand> out;
  for (const auto& orbit : orbits(basis_line_gset(v))) {
    std::vector<std::uint32_t> local(v.dim(), 0);
    for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<std::uint32_t>(i);
    std::vector<MonomialMap> images;
    for (const auto& m : v.images()) {
      Permutation p(orbit.size());
      std::vector<Value> s;
      s.reserve(orbit.size());
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        p[i] = local[m.perm()[orbit[i]]];
        s.push_back(m.scalars()[orbit[i]]);
      }
      images.push_back(MonomialMap::create(v.tag(), std::move(p), std::move(s)));
    }
    out.push_back({Representation::create(v.group(), v.tag(), orbit.size(), std::move(images)),
                   orbit});
  }
  return out;
}

// --- Characters -------------------------------------------------------------

Character Character::create(const Subgroup& h, SemifieldTag tag, std::vector<Value> values) {
  if (values.size() != h.size()) throw ValidationError("character needs one value per element");
  for (const auto& u : values) {
    if (u.tag() != tag) throw TagMismatch("character value over the wrong semifield");
    if (u.is_zero()) throw ValidationError("character values must be units");
  }
  const FiniteGroup& g = h.group();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_one()) continue;
    const Element x = h.elements()[i];
    const std::size_t k = g.element_order(x);
    throw TorsionObstruction("character value " + values[i].to_string() + " at " +
                             g.name_of(x) + " (order " + std::to_string(k) +
                             ") would be a nontrivial torsion unit; K^x is torsion-free");
  }
  return Character(h, tag, std::move(values));
}

Character Character::trivial(const Subgroup& h, SemifieldTag tag) {
  return Character(h, tag, std::vector<Value>(h.size(), Value::one(tag)));
}

Value Character::at(Element x) const {
  const auto& e = subgroup_.elements();
  auto it = std::lower_bound(e.begin(), e.end(), x);
  if (it == e.end() || *it != x) throw ValidationError("character evaluated outside its subgroup");
  return values_[static_cast<std::size_t>(it - e.begin())];
}

bool Character::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const Value& u) { return u.is_one(); });
}

// --- Classification -----------------------------------------------------------

IndecomposableTag stabilizer_pair(const Representation& v, Point line) {
  if (line >= v.dim()) throw ValidationError("stabilizer_pair: basis line out of range");
  if (!is_indecomposable(v)) {
    throw ValidationError("stabilizer_pair: representation is decomposable; classify each summand");
  }
  const FiniteGroup& g = v.group();
  Subgroup h = stabilizer(basis_line_gset(v), line);
  Subgroup canonical = canonical_conjugate(h);
  Element conj = 0;
  while (!(h.conjugate_by(conj) == canonical)) ++conj;
  // chi'(h') = chi(conj^-1 h' conj), chi(x) = scalar of image(x) on the line.
  std::vector<Value> values;
  for (Element y : canonical.elements()) {
    const Element x = g.conjugate(y, g.inverse(conj));
    values.push_back(v.image(x).scalars()[line]);
  }
  Character chi = Character::create(canonical, v.tag(), std::move(values));
  return {std::move(canonical), std::move(chi)};
}

Representation induce_from_pair(const FiniteGroup& g, SemifieldTag tag, const Subgroup& h,
                                const Character& chi) {
  require_same_group(g, h.group(), "induce_from_pair");
  if (!(chi.subgroup() == h)) throw ValidationError("induce_from_pair: character is not defined on H");
  if (chi.tag() != tag) throw TagMismatch("induce_from_pair: character over the wrong semifield");
  const CosetSection cosets = left_cosets(g, h);
  const std::size_t n = cosets.size();
  std::vector<MonomialMap> images;
  images.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    Permutation p(n);
    std::vector<Value> s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Element at = g.mul(a, cosets.representatives[i]);
      p[i] = static_cast<std::uint32_t>(cosets.coset_of[at]);
      s.push_back(chi.at(cosets.residue(at)));
    }
    images.push_back(MonomialMap::create(tag, std::move(p), std::move(s)));
  }
  return Representation::create(g, tag, n, std::move(images));
}

std::vector<ClassifiedIndecomposable> classify_indecomposables(const FiniteGroup& g,
                                                               SemifieldTag tag) {
  std::vector<ClassifiedIndecomposable> out;
  for (auto& h : subgroups_up_to_conjugacy(g)) {
    Character chi = Character::trivial(h, tag);
    Representation v = induce_from_pair(g, tag, h, chi);
    out.push_back({{std::move(h), std::move(chi)}, std::move(v)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.representation.dim() < b.representation.dim();
  });
  return out;
}

bool representations_isomorphic(const Representation& v, const Representation& w) {
  require_same_group(v.group(), w.group(), "representations_isomorphic");
  if (v.tag() != w.tag()) throw TagMismatch("representations_isomorphic: mixed semifields");
  if (v.dim() != w.dim()) return false;
  return gsets_isomorphic(basis_line_gset(v), basis_line_gset(w));
}

Representation quotient_of_regular_by(const FiniteGroup& g, SemifieldTag tag, const Subgroup& h) {
  require_same_group(g, h.group(), "quotient_of_regular_by");
  // Union-find on the basis of K[G] for the relation x ~ x h.
  std::vector<Element> parent(g.order());
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : h.elements()) {
      Element a = find(x), b = find(g.mul(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> class_of(g.order());
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (find(x) == x) {
      class_of[x] = reps.size();
      reps.push_back(x);
    }
  }
  for (Element x = 0; x < g.order(); ++x) class_of[x] = class_of[find(x)];
  const std::size_t n = reps.size();
  std::vector<MonomialMap> images;
  for (Element a = 0; a < g.order(); ++a) {
    Permutation p(n);
    for (std::size_t c = 0; c < n; ++c) p[c] = static_cast<std::uint32_t>(class_of[g.mul(a, reps[c])]);
    for (Element x = 0; x < g.order(); ++x) {
      if (class_of[g.mul(a, x)] != p[class_of[x]]) {
        throw std::logic_error("quotient_of_regular_by: action not well defined on classes");
      }
    }
    images.push_back(MonomialMap::permutation(tag, std::move(p)));
  }
  return Representation::create(g, tag, n, std::move(images));
}

std::vector<Value> coset_form(const Representation& v, const IndecomposableTag& tag,
                              const Vector& x) {
  require_same_group(v.group(), tag.subgroup.group(), "coset_form");
  if (x.tag != v.tag() || x.size() != v.dim()) {
    throw ValidationError("coset_form: vector does not belong to the representation");
  }
  if (!is_indecomposable(v)) throw ValidationError("coset_form: representation is decomposable");
  const Point base = line_with_stabilizer(v, tag.subgroup);
  const FiniteGroup& g = v.group();
  std::vector<Value> coeffs;
  coeffs.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    const MonomialMap& m = v.image(a);
    const Value& entry = x.entries[m.perm()[base]];
    coeffs.push_back(entry.is_zero() ? entry : mul(entry, inv(m.scalars()[base])));
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element h : tag.subgroup.elements())
      if (!(coeffs[g.mul(a, h)] == coeffs[a])) {
        throw std::logic_error("coset_form: coefficients are not constant on left cosets");
      }
  return coeffs;
}

Vector from_coset_form(const Representation& v, const IndecomposableTag& tag,
                       std::span<const Value> coefficients) {
  const FiniteGroup& g = v.group();
  if (coefficients.size() != g.order()) {
    throw ValidationError("from_coset_form: one coefficient per group element is required");
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element h : tag.subgroup.elements())
      if (!(coefficients[g.mul(a, h)] == coefficients[a])) {
        throw ValidationError("from_coset_form: coefficients are not constant on left cosets");
      }
  const Point base = line_with_stabilizer(v, tag.subgroup);
  Vector out = Vector::zero(v.tag(), v.dim());
  for (Element a = 0; a < g.order(); ++a) {
    const MonomialMap& m = v.image(a);
    Value& slot = out.entries[m.perm()[base]];
    slot = add(slot, mul(coefficients[a], m.scalars()[base]));
  }
  return out;
}

std::vector<std::vector<Point>> subtractive_g_submodules(const Representation& v) {
  const auto orbs = orbits(basis_line_gset(v));
  if (orbs.size() > 20) throw CapExceeded("subtractive_g_submodules: more than 20 orbits");
  std::vector<std::vector<Point>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << orbs.size()); ++mask) {
    std::vector<Point> subset;
    for (std::size_t i = 0; i < orbs.size(); ++i)
      if (mask >> i & 1) subset.insert(subset.end(), orbs[i].begin(), orbs[i].end());
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace idemrep
