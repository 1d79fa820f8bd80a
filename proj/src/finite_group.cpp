#include "idemrep/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace idemrep {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (auto x : p) h = h * 1000003u ^ x;
    return h;
  }
};

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Closure of a generating set inside g by right multiplication by generators.
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : generators) {
      Element y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation cycle(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  Permutation p = identity_permutation(degree);
  std::vector<std::uint32_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

Permutation full_cycle(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return p;
}

std::size_t parse_index(std::string_view text, std::string_view whole) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw ParseError("unknown group name '" + std::string(whole) + "'");
  }
  return n;
}

std::vector<Permutation> permutation_closure(std::span<const Permutation> generators,
                                             std::size_t degree, std::size_t order_cap) {
  for (const auto& s : generators) {
    if (s.size() != degree || !is_permutation(s)) {
      throw ValidationError("generator " + cycle_notation(s) +
                            " is not a permutation of the ground set");
    }
  }
  std::vector<Permutation> elems{identity_permutation(degree)};
  std::unordered_map<Permutation, Element, PermutationHash> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = compose_permutations(s, elems[i]);
      if (index.emplace(y, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > order_cap) {
          throw CapExceeded("permutation closure exceeds the order cap of " +
                            std::to_string(order_cap));
        }
      }
    }
  }
  return elems;
}

}  // namespace

Permutation compose_permutations(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation invert_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = p[x];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> names, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw ValidationError("group table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw ValidationError("group table entry out of range");
      data->table[a * n + b] = table[a][b];
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return data->table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw ValidationError("element 0 is not the identity of the group table");
    }
  }
  data->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[at(a, b)] || col[at(b, a)]) {
        throw ValidationError("group table is not a Latin square (element " +
                              std::to_string(a) + ")");
      }
      row[at(a, b)] = true;
      col[at(b, a)] = true;
      if (at(a, b) == 0) {
        if (at(b, a) != 0) throw ValidationError("left and right inverses differ");
        data->inverse[a] = static_cast<Element>(b);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw ValidationError("group table is not associative at (" + std::to_string(a) +
                                ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  }
  if (names.size() != n) throw ValidationError("group names do not match the order");
  data->names = std::move(names);
  data->label = std::move(label);
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_permutations_unchecked(const std::vector<Permutation>& elems,
                                                    std::vector<std::string> names,
                                                    std::string label) {
  std::unordered_map<Permutation, Element, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  const std::size_t n = elems.size();
  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.resize(n * n);
  data->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      data->table[a * n + b] = index.at(compose_permutations(elems[a], elems[b]));
    }
    data->inverse[a] = index.at(invert_permutation(elems[a]));
  }
  data->names = std::move(names);
  data->label = std::move(label);
  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order(), std::vector<Element>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) out[a][b] = mul(a, b);
  return out;
}

FiniteGroup FiniteGroup::opposite() const {
  auto data = std::make_shared<Data>(*data_);
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) data->table[a * n + b] = data_->table[b * n + a];
  data->label = data_->label.empty() ? std::string() : data_->label + "^op";
  return FiniteGroup(std::move(data));
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ ||
         (a.data_->order == b.data_->order && a.data_->table == b.data_->table);
}

FiniteGroup group_from_permutations(std::span<const Permutation> generators, std::size_t degree,
                                    std::size_t order_cap, std::string label) {
  std::vector<Permutation> elems = permutation_closure(generators, degree, order_cap);
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(cycle_notation(p));
  return FiniteGroup::from_permutations_unchecked(elems, std::move(names), std::move(label));
}

FiniteGroup quaternion_group() {
  // Point q = 4 * sign + unit, unit in {1, i, j, k}.
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto left_mul = [&](int sign, int unit) {
    Permutation p(8);
    for (int q = 0; q < 8; ++q) {
      auto [s, u] = unit_mul[unit][q % 4];
      p[q] = static_cast<std::uint32_t>(((sign + q / 4 + s) % 2) * 4 + u);
    }
    return p;
  };
  std::vector<Permutation> gens{left_mul(0, 1), left_mul(0, 2)};
  std::vector<Permutation> elems = permutation_closure(gens, 8, kDefaultOrderCap);
  // Each element is named by the image of the point 1, i.e. the quaternion itself.
  static const std::array<const char*, 8> quat{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  std::vector<std::string> names;
  for (const auto& p : elems) names.emplace_back(quat[p[0]]);
  return FiniteGroup::from_permutations_unchecked(elems, std::move(names), "Q8");
}

FiniteGroup named_group(std::string_view name, std::size_t order_cap) {
  const std::string label(name);
  if (name == "trivial" || name == "C1" || name == "S1") {
    return group_from_permutations({}, 1, order_cap, "C1");
  }
  if (name == "K4" || name == "V4" || name == "C2xC2") {
    std::vector<Permutation> gens{cycle(4, {0, 1}), cycle(4, {2, 3})};
    return group_from_permutations(gens, 4, order_cap, "C2xC2");
  }
  if (name == "Q8") return quaternion_group();
  if (name.size() < 2) throw ParseError("unknown group name '" + label + "'");
  const char family = name[0];
  const std::size_t n = parse_index(name.substr(1), name);
  switch (family) {
    case 'C': {
      std::vector<Permutation> gens;
      if (n > 1) gens.push_back(full_cycle(n));
      return group_from_permutations(gens, n, order_cap, label);
    }
    case 'S': {
      std::vector<Permutation> gens;
      if (n > 1) gens.push_back(cycle(n, {0, 1}));
      if (n > 2) gens.push_back(full_cycle(n));
      return group_from_permutations(gens, n, order_cap, label);
    }
    case 'A': {
      std::vector<Permutation> gens;
      for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
      return group_from_permutations(gens, std::max<std::size_t>(n, 1), order_cap, label);
    }
    case 'D': {
      if (n < 2) throw ParseError("dihedral groups need n >= 2");
      Permutation reflection(n);
      for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<std::uint32_t>((n - i) % n);
      std::vector<Permutation> gens{full_cycle(n), reflection};
      if (n == 2) {
        // The 2-gon: a Klein four-group acting on 4 points.
        gens = {cycle(4, {0, 1}), cycle(4, {2, 3})};
        return group_from_permutations(gens, 4, order_cap, label);
      }
      return group_from_permutations(gens, n, order_cap, label);
    }
    default:
      throw ParseError("unknown group name '" + label + "'");
  }
}

std::vector<std::string> zoo_group_names() {
  return {"C2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "D4", "Q8", "A4"};
}

// --- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup g, std::vector<Element> elements)
    : group_(std::move(g)), elements_(std::move(elements)), member_(group_.order(), false) {
  for (Element x : elements_) member_[x] = true;
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<Element> elements) {
  elements = sorted_unique(std::move(elements));
  for (Element x : elements) {
    if (x >= g.order()) throw ValidationError("subgroup element out of range");
  }
  Subgroup h(g, std::move(elements));
  if (h.elements_.empty() || h.elements_.front() != FiniteGroup::identity()) {
    throw ValidationError("subgroup does not contain the identity");
  }
  for (Element a : h.elements_) {
    if (!h.contains(g.inverse(a))) throw ValidationError("subgroup not closed under inversion");
    for (Element b : h.elements_) {
      if (!h.contains(g.mul(a, b))) {
        throw ValidationError("subgroup not closed under multiplication");
      }
    }
  }
  return h;
}

Subgroup Subgroup::generated_by(const FiniteGroup& g, std::span<const Element> generators) {
  for (Element x : generators) {
    if (x >= g.order()) throw ValidationError("generator out of range");
  }
  return Subgroup(g, closure(g, generators));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {FiniteGroup::identity()}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::conjugate_by(Element g) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element h : elements_) out.push_back(group_.conjugate(h, g));
  std::sort(out.begin(), out.end());
  return Subgroup(group_, std::move(out));
}

std::string Subgroup::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ", ";
    out += group_.name_of(elements_[i]);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.elements_ <=> b.elements_;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  // Every subgroup is reached from the trivial one by adjoining elements one
  // at a time, so a breadth-first search over "H plus one element" is complete.
  struct Node {
    std::vector<Element> elements;
    std::vector<Element> generators;
  };
  std::set<std::vector<Element>> seen;
  std::deque<Node> queue;
  queue.push_back({{FiniteGroup::identity()}, {}});
  seen.insert(queue.front().elements);
  std::vector<Subgroup> out;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    std::vector<bool> member(g.order(), false);
    for (Element x : node.elements) member[x] = true;
    for (Element x = 0; x < g.order(); ++x) {
      if (member[x]) continue;
      std::vector<Element> gens = node.generators;
      gens.push_back(x);
      std::vector<Element> k = closure(g, gens);
      if (seen.insert(k).second) queue.push_back({std::move(k), std::move(gens)});
    }
    out.push_back(Subgroup::from_elements(g, std::move(node.elements)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup canonical_conjugate(const Subgroup& h) {
  Subgroup best = h;
  for (Element g = 1; g < h.group().order(); ++g) {
    Subgroup c = h.conjugate_by(g);
    if (c.elements() < best.elements()) best = std::move(c);
  }
  return best;
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return false;
  return canonical_conjugate(a) == canonical_conjugate(b);
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const FiniteGroup& g) {
  std::vector<Subgroup> reps;
  std::set<std::vector<Element>> seen;
  for (const auto& h : all_subgroups(g)) {
    Subgroup c = canonical_conjugate(h);
    if (seen.insert(c.elements()).second) reps.push_back(std::move(c));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

// --- Cosets -----------------------------------------------------------------

namespace {

void require_subgroup_of(const FiniteGroup& g, const Subgroup& h) {
  if (!(h.group() == g)) throw ValidationError("subgroup belongs to a different group");
}

}  // namespace

Element CosetSection::residue(Element g) const {
  const FiniteGroup& grp = subgroup.group();
  return grp.mul(grp.inverse(representatives[coset_of[g]]), g);
}

CosetSection left_cosets(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  CosetSection out{h, {}, std::vector<std::size_t>(g.order(), kUnset)};
  for (Element x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != kUnset) continue;
    const std::size_t idx = out.representatives.size();
    out.representatives.push_back(x);
    for (Element y : h.elements()) out.coset_of[g.mul(x, y)] = idx;
  }
  return out;
}

DoubleCosetSpace double_cosets(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  require_subgroup_of(g, h1);
  require_subgroup_of(g, h2);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  DoubleCosetSpace out{h1, h2, {}, {}, std::vector<std::size_t>(g.order(), kUnset)};
  for (Element x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != kUnset) continue;
    const std::size_t idx = out.classes.size();
    std::vector<Element> cls;
    for (Element a : h1.elements()) {
      for (Element b : h2.elements()) {
        Element y = g.mul(g.mul(a, x), b);
        if (out.class_of[y] == kUnset) {
          out.class_of[y] = idx;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
    out.representatives.push_back(x);
  }
  return out;
}

// --- G-sets -----------------------------------------------------------------

GSet GSet::create(const FiniteGroup& g, std::size_t size, std::vector<Point> action) {
  if (action.size() != g.order() * size) throw ValidationError("G-set action table has wrong size");
  for (Point p : action) {
    if (p >= size) throw ValidationError("G-set action maps outside the set");
  }
  GSet s(g, size, std::move(action));
  for (Point p = 0; p < size; ++p) {
    if (s.act(0, p) != p) throw ValidationError("identity does not act trivially on the G-set");
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Point p = 0; p < size; ++p)
        if (s.act(g.mul(a, b), p) != s.act(a, s.act(b, p))) {
          throw ValidationError("G-set action is not compatible with the group law");
        }
  return s;
}

GSet GSet::on_cosets(const FiniteGroup& g, const Subgroup& h) {
  CosetSection cosets = left_cosets(g, h);
  const std::size_t n = cosets.size();
  std::vector<Point> action(g.order() * n);
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      action[a * n + i] = static_cast<Point>(cosets.coset_of[g.mul(a, cosets.representatives[i])]);
  return GSet(g, n, std::move(action));
}

GSet GSet::regular(const FiniteGroup& g) { return on_cosets(g, Subgroup::trivial(g)); }

GSet GSet::trivial(const FiniteGroup& g, std::size_t size) {
  std::vector<Point> action(g.order() * size);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t p = 0; p < size; ++p) action[a * size + p] = static_cast<Point>(p);
  return GSet(g, size, std::move(action));
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  if (!(a.group() == b.group())) throw ValidationError("disjoint union of G-sets over different groups");
  const std::size_t n = a.size() + b.size();
  std::vector<Point> action(a.group().order() * n);
  for (Element g = 0; g < a.group().order(); ++g) {
    for (Point p = 0; p < a.size(); ++p) action[g * n + p] = a.act(g, p);
    for (Point p = 0; p < b.size(); ++p) {
      action[g * n + a.size() + p] = static_cast<Point>(a.size() + b.act(g, p));
    }
  }
  return GSet::create(a.group(), n, std::move(action));
}

std::vector<std::vector<Point>> orbits(const GSet& s) {
  std::vector<bool> seen(s.size(), false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < s.size(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit;
    for (Element g = 0; g < s.group().order(); ++g) {
      Point q = s.act(g, p);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const GSet& s, Point point) {
  if (point >= s.size()) throw ValidationError("stabilizer: point out of range");
  std::vector<Element> elems;
  for (Element g = 0; g < s.group().order(); ++g) {
    if (s.act(g, point) == point) elems.push_back(g);
  }
  return Subgroup::from_elements(s.group(), std::move(elems));
}

bool gsets_isomorphic(const GSet& s, const GSet& t) {
  if (!(s.group() == t.group())) throw ValidationError("gsets_isomorphic: G-sets over different groups");
  if (s.size() != t.size()) return false;
  auto signature = [](const GSet& x) {
    std::vector<std::vector<Element>> sig;
    for (const auto& orbit : orbits(x)) {
      sig.push_back(canonical_conjugate(stabilizer(x, orbit.front())).elements());
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  return signature(s) == signature(t);
}

}  // namespace idemrep
