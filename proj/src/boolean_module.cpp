#include "idemrep/boolean_module.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace idemrep {

namespace {

using Relation = std::vector<std::vector<bool>>;

Relation order_from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Relation leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : covers) leq[a][b] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return leq;
}

std::string chain_label(std::size_t i) {
  if (i == 0) return "0";
  if (i <= 26) return std::string(1, static_cast<char>('a' + i - 1));
  return "x" + std::to_string(i);
}

std::size_t parse_suffix(std::string_view name, std::string_view prefix) {
  const std::string_view digits = name.substr(prefix.size());
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("unknown lattice '" + std::string(name) + "'");
  }
  return std::stoul(std::string(digits));
}

Bits permute_bits(const GSet& coords, Element g, const Bits& b) {
  Bits out(b.width());
  for (std::size_t i = 0; i < b.width(); ++i) {
    if (b.test(i)) out.set(coords.act(g, static_cast<Point>(i)));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteBModule

FiniteBModule FiniteBModule::trusted(std::vector<Bits> family, std::vector<std::string> labels,
                                     std::vector<std::size_t> generators) {
  auto d = std::make_shared<Data>();
  if (generators.empty()) {
    generators.resize(family.size());
    for (std::size_t i = 0; i < generators.size(); ++i) generators[i] = i;
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  d->generators = std::move(generators);
  d->width = family.empty() ? 0 : family.front().width();
  d->index.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    d->index.emplace(family[i], i);
    if (family[i].count() < family[d->bottom].count()) d->bottom = i;
    if (family[i].count() > family[d->top].count()) d->top = i;
  }
  if (labels.empty()) {
    labels.reserve(family.size());
    for (const auto& b : family) labels.push_back(b.to_string());
  }
  d->bits = std::move(family);
  d->labels = std::move(labels);
  return FiniteBModule(std::move(d));
}

FiniteBModule FiniteBModule::from_order(const Relation& leq, std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  if (n == 0) throw ValidationError("lattice has no elements");
  if (!labels.empty() && labels.size() != n) throw ValidationError("lattice: label count differs from size");
  for (const auto& row : leq) {
    if (row.size() != n) throw ValidationError("lattice: order relation is not square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) throw ValidationError("not a partial order: not reflexive at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        throw ValidationError("not a partial order: " + std::to_string(a) + " and " +
                              std::to_string(b) + " are mutually below each other");
      }
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[b][c] && !leq[a][c]) {
          throw ValidationError("not a partial order: not transitive at " + std::to_string(a) + " <= " +
                                std::to_string(b) + " <= " + std::to_string(c));
        }
      }
    }
  }
  bool has_bottom = false;
  for (std::size_t b = 0; b < n && !has_bottom; ++b) {
    has_bottom = std::all_of(leq[b].begin(), leq[b].end(), [](bool x) { return x; });
  }
  if (!has_bottom) throw ValidationError("lattice has no least element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::size_t> upper;
      for (std::size_t u = 0; u < n; ++u) {
        if (leq[a][u] && leq[b][u]) upper.push_back(u);
      }
      const bool has_least = std::any_of(upper.begin(), upper.end(), [&](std::size_t u) {
        return std::all_of(upper.begin(), upper.end(), [&](std::size_t v) { return leq[u][v]; });
      });
      if (!has_least) {
        throw ValidationError("missing join for elements " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }
  // x -> {y : x not <= y} turns joins into unions.
  std::vector<Bits> family;
  family.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bits b(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq[x][y]) b.set(y);
    }
    family.push_back(std::move(b));
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return trusted(std::move(family), std::move(labels));
}

FiniteBModule FiniteBModule::from_join_closed(std::vector<Bits> family, std::vector<std::string> labels) {
  if (family.empty()) throw ValidationError("lattice has no elements");
  if (!labels.empty() && labels.size() != family.size()) {
    throw ValidationError("lattice: label count differs from size");
  }
  std::unordered_set<Bits, BitsHash> members;
  for (const auto& b : family) {
    if (b.width() != family.front().width()) throw ValidationError("lattice: bitsets of different widths");
    if (!members.insert(b).second) throw ValidationError("lattice: repeated member " + b.to_string());
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (!members.contains(family[a] | family[b])) {
        throw ValidationError("missing join for elements " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }
  const auto least = std::min_element(family.begin(), family.end(),
                                      [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
  for (const auto& b : family) {
    if (!least->subset_of(b)) throw ValidationError("lattice has no least element");
  }
  return trusted(std::move(family), std::move(labels));
}

std::size_t FiniteBModule::join(std::size_t a, std::size_t b) const {
  auto it = data_->index.find(data_->bits[a] | data_->bits[b]);
  if (it == data_->index.end()) throw std::logic_error("FiniteBModule: family is not union-closed");
  return it->second;
}

std::optional<std::size_t> FiniteBModule::index_of(const Bits& b) const {
  auto it = data_->index.find(b);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Relation FiniteBModule::order_relation() const {
  Relation r(size(), std::vector<bool>(size(), false));
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) r[a][b] = leq(a, b);
  }
  return r;
}

bool operator==(const FiniteBModule& a, const FiniteBModule& b) {
  if (a.data_ == b.data_) return true;
  return a.size() == b.size() && a.labels() == b.labels() && a.order_relation() == b.order_relation();
}

FiniteBModule closure_module(std::vector<Bits> seeds, const Bits& bottom) {
  std::unordered_set<Bits, BitsHash> seen{bottom};
  std::vector<Bits> family{bottom};
  for (const auto& s : seeds) {
    if (s.width() != bottom.width()) throw ValidationError("closure_module: width mismatch");
    const std::size_t current = family.size();
    for (std::size_t i = 0; i < current; ++i) {
      Bits joined = family[i] | s;
      if (seen.insert(joined).second) family.push_back(std::move(joined));
    }
  }
  std::sort(family.begin(), family.end(), [](const Bits& a, const Bits& b) {
    const auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::size_t> generators;
  for (const auto& s : seeds) {
    const auto it = std::lower_bound(family.begin(), family.end(), s, [](const Bits& a, const Bits& b) {
      const auto ca = a.count(), cb = b.count();
      return ca != cb ? ca < cb : a < b;
    });
    generators.push_back(static_cast<std::size_t>(it - family.begin()));
  }
  generators.push_back(0);
  return FiniteBModule::trusted(std::move(family), {}, std::move(generators));
}

FiniteBModule boolean_cube(std::size_t n) {
  if (n > 20) throw CapExceeded("boolean_cube: more than 2^20 elements");
  std::vector<Bits> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    Bits b(n);
    b.set(i);
    atoms.push_back(std::move(b));
  }
  return closure_module(std::move(atoms), Bits(n));
}

FiniteBModule chain(std::size_t k) {
  if (k == 0) throw ValidationError("chain: needs at least one element");
  std::vector<Bits> family;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    Bits b(k - 1);
    for (std::size_t j = 0; j < i; ++j) b.set(j);
    family.push_back(std::move(b));
    labels.push_back(chain_label(i));
  }
  return FiniteBModule::from_join_closed(std::move(family), std::move(labels));
}

FiniteBModule named_lattice(std::string_view name) {
  if (name == "B") return FiniteBModule::from_join_closed({Bits(1), Bits::from_mask(1, 1)}, {"0", "1"});
  if (name == "diamond") {
    return FiniteBModule::from_join_closed(
        {Bits::from_mask(2, 0), Bits::from_mask(2, 1), Bits::from_mask(2, 2), Bits::from_mask(2, 3)},
        {"0", "a", "b", "a+b"});
  }
  if (name == "N5") {
    return FiniteBModule::from_order(order_from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}),
                                     {"0", "a", "b", "c", "1"});
  }
  if (name == "M3") {
    return FiniteBModule::from_order(
        order_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}), {"0", "a", "b", "c", "1"});
  }
  if (name.starts_with("chain")) return chain(parse_suffix(name, "chain"));
  if (name.starts_with("cube")) return boolean_cube(parse_suffix(name, "cube"));
  throw ParseError("unknown lattice '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Duality

DualModule dual(const FiniteBModule& m) {
  const std::size_t n = m.size();
  std::vector<Bits> family;
  std::vector<std::string> labels;
  std::vector<std::size_t> psi(n);
  for (std::size_t x = 0; x < n; ++x) {
    // psi(x): y -> [y not <= x], stored by its support.
    Bits phi(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (!m.leq(y, x)) phi.set(y);
    }
    family.push_back(std::move(phi));
    labels.push_back("psi(" + m.label(x) + ")");
    psi[x] = x;
  }
  return {FiniteBModule::from_join_closed(std::move(family), std::move(labels)), std::move(psi)};
}

DoubleDual double_dual_canonical(const FiniteBModule& m) {
  const DualModule d = dual(m);
  const DualModule dd = dual(d.module);
  const std::size_t n = m.size();
  DoubleDual out{dd.module, std::vector<std::size_t>(n), false, false, false};
  for (std::size_t x = 0; x < n; ++x) {
    // eval(x)(psi(k)) = psi(k)(x) = [x not <= k].
    Bits ev(d.module.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (!m.leq(x, k)) ev.set(d.psi[k]);
    }
    const auto idx = dd.module.index_of(ev);
    if (!idx) throw std::logic_error("double_dual_canonical: evaluation is not a hom on the dual");
    out.eval[x] = *idx;
  }
  std::vector<std::size_t> sorted = out.eval;
  std::sort(sorted.begin(), sorted.end());
  out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  out.surjective = out.injective && sorted.size() == dd.module.size();
  out.preserves_join = out.eval[m.bottom()] == dd.module.bottom();
  for (std::size_t a = 0; a < n && out.preserves_join; ++a) {
    for (std::size_t b = a + 1; b < n && out.preserves_join; ++b) {
      out.preserves_join = out.eval[m.join(a, b)] == dd.module.join(out.eval[a], out.eval[b]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Irreducibles and quasi-freeness

std::vector<std::size_t> join_irreducibles(const FiniteBModule& m) {
  // Join-irreducibles lie in every join-generating set, and the members
  // strictly below x have the same union as the generators strictly below x.
  const auto& gens = m.generators();
  std::vector<std::size_t> out;
  for (std::size_t x : gens) {
    if (x == m.bottom()) continue;
    const Bits& bx = m.bits(x);
    Bits below = m.bits(m.bottom());
    for (std::size_t y : gens) {
      if (y != x && m.bits(y).subset_of(bx)) below |= m.bits(y);
    }
    if (below != bx) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> meet_irreducibles(const FiniteBModule& m) {
  const auto ji = join_irreducibles(m);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (x == m.top()) continue;
    // Every upper cover of x is x + j for a join-irreducible j not below x.
    std::vector<std::size_t> candidates;
    for (std::size_t j : ji) {
      if (!m.leq(j, x)) candidates.push_back(m.join(x, j));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t minimal = 0;
    for (std::size_t c : candidates) {
      const bool is_min = std::none_of(candidates.begin(), candidates.end(),
                                       [&](std::size_t d) { return d != c && m.leq(d, c); });
      if (is_min) ++minimal;
    }
    if (minimal == 1) out.push_back(x);
  }
  return out;
}

std::size_t max_chain_length_join_irreducibles(const FiniteBModule& m) {
  auto ji = join_irreducibles(m);
  std::stable_sort(ji.begin(), ji.end(),
                   [&](std::size_t a, std::size_t b) { return m.bits(a).count() < m.bits(b).count(); });
  std::vector<std::size_t> longest(ji.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < ji.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (ji[k] != ji[i] && m.leq(ji[k], ji[i])) longest[i] = std::max(longest[i], longest[k] + 1);
    }
    best = std::max(best, longest[i]);
  }
  return best;
}

bool is_atomistic(const FiniteBModule& m) {
  std::vector<std::size_t> atoms;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (x == m.bottom()) continue;
    bool atom = true;
    for (std::size_t y = 0; y < m.size() && atom; ++y) {
      atom = y == x || y == m.bottom() || !m.leq(y, x);
    }
    if (atom) atoms.push_back(x);
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    Bits u = m.bits(m.bottom());
    for (std::size_t a : atoms) {
      if (m.leq(a, x)) u |= m.bits(a);
    }
    if (u != m.bits(x)) return false;
  }
  return true;
}

namespace {

/// A set of nonzero elements that generates m and is quasi-independent.
bool is_quasi_basis(const FiniteBModule& m, const std::vector<std::size_t>& s) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    Bits u = m.bits(m.bottom());
    for (std::size_t i : s) {
      if (m.leq(i, x)) u |= m.bits(i);
    }
    if (u != m.bits(x)) return false;
  }
  for (std::size_t i : s) {
    Bits u = m.bits(m.bottom());
    for (std::size_t j : s) {
      if (j == i || !m.leq(j, i)) continue;
      // Already x_i = x_j + x_i.
      return false;
    }
    for (std::size_t j : s) {
      if (j != i && m.leq(j, i)) u |= m.bits(j);
    }
    if (u == m.bits(i)) return false;
  }
  return true;
}

}  // namespace

std::variant<QuasiBasis, NotQuasiFree> quasi_basis_search(const FiniteBModule& m, std::size_t fallback_cap) {
  const auto ji = join_irreducibles(m);
  std::optional<NotQuasiFree> failure;
  for (std::size_t i : ji) {
    for (std::size_t j : ji) {
      if (j != i && m.leq(j, i)) {
        failure = NotQuasiFree{i, {j, i}, m.label(i) + " = " + m.label(j) + " + " + m.label(i)};
        break;
      }
    }
    if (failure) break;
  }
  if (m.size() <= fallback_cap && m.size() > 1) {
    // Every generating set contains the join-irreducibles; search the rest.
    std::vector<std::size_t> others;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (x != m.bottom() && !std::binary_search(ji.begin(), ji.end(), x)) others.push_back(x);
    }
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()) && !found; ++mask) {
      std::vector<std::size_t> s = ji;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (mask >> k & 1) s.push_back(others[k]);
      }
      found = is_quasi_basis(m, s);
    }
    if (found == failure.has_value()) {
      throw std::logic_error("quasi_basis_search: exhaustive search disagrees with the antichain test");
    }
  }
  if (failure) return *failure;
  return QuasiBasis{ji};
}

// ---------------------------------------------------------------------------
// B[G]-modules

BGModule BGModule::create(FiniteBModule m, FiniteGroup g, std::vector<std::size_t> action) {
  const std::size_t n = m.size();
  if (action.size() != g.order() * n) throw ValidationError("action table has the wrong size");
  auto at = [&](Element x, std::size_t p) { return action[static_cast<std::size_t>(x) * n + p]; };
  for (std::size_t p = 0; p < n; ++p) {
    if (at(0, p) != p) throw ValidationError("identity does not act trivially");
  }
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<bool> hit(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      if (at(x, p) >= n) throw ValidationError("action maps outside the module");
      hit[at(x, p)] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw ValidationError("element " + g.name_of(x) + " does not act bijectively");
    }
    if (at(x, m.bottom()) != m.bottom()) throw ValidationError("element " + g.name_of(x) + " moves zero");
    for (Element y = 0; y < g.order(); ++y) {
      for (std::size_t p = 0; p < n; ++p) {
        if (at(g.mul(x, y), p) != at(x, at(y, p))) throw ValidationError("action is not compatible with the group law");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (at(x, m.join(a, b)) != m.join(at(x, a), at(x, b))) {
          throw ValidationError("element " + g.name_of(x) + " does not preserve joins");
        }
      }
    }
  }
  return BGModule(std::move(m), std::move(g), std::move(action));
}

BGModule BGModule::from_coordinate_action(FiniteBModule m, const GSet& coordinates) {
  if (coordinates.size() != m.width()) throw ValidationError("coordinate action has the wrong width");
  const FiniteGroup& g = coordinates.group();
  const std::size_t n = m.size();
  std::vector<std::size_t> action(g.order() * n);
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t p = 0; p < n; ++p) {
      const auto idx = m.index_of(permute_bits(coordinates, x, m.bits(p)));
      if (!idx) throw ValidationError("module is not stable under " + g.name_of(x));
      action[static_cast<std::size_t>(x) * n + p] = *idx;
    }
  }
  return BGModule(std::move(m), g, std::move(action));
}

BGModule BGModule::trivial_action(FiniteBModule m, FiniteGroup g) {
  std::vector<std::size_t> action(g.order() * m.size());
  for (std::size_t i = 0; i < action.size(); ++i) action[i] = i % m.size();
  return BGModule(std::move(m), std::move(g), std::move(action));
}

GSet regular_power_gset(const FiniteGroup& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<Point> action(n * n * k);
  for (Element x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      for (Element h = 0; h < n; ++h) {
        action[x * n * k + i * n + h] = static_cast<Point>(i * n + g.mul(x, h));
      }
    }
  }
  return GSet::create(g, n * k, std::move(action));
}

BGModule free_module(const FiniteGroup& g, std::size_t k, std::size_t max_bits) {
  const std::size_t width = k * g.order();
  if (width > max_bits) {
    throw CapExceeded("free_module: " + std::to_string(width) + " coordinates exceed the cap of " +
                      std::to_string(max_bits));
  }
  std::vector<Bits> basis;
  for (std::size_t i = 0; i < width; ++i) {
    Bits b(width);
    b.set(i);
    basis.push_back(std::move(b));
  }
  return BGModule::from_coordinate_action(closure_module(std::move(basis), Bits(width)),
                                          regular_power_gset(g, k));
}

BGModule cyclic_bg_module(const BGModule& m, std::size_t generator) {
  const FiniteBModule& parent = m.module();
  if (generator >= parent.size()) throw ValidationError("generator out of range");
  const FiniteGroup& g = m.group();
  std::vector<Bits> orbit;
  for (Element x = 0; x < g.order(); ++x) orbit.push_back(parent.bits(m.act(x, generator)));
  FiniteBModule sub = closure_module(std::move(orbit), parent.bits(parent.bottom()));
  std::vector<std::size_t> to_parent(sub.size());
  std::vector<std::string> labels(sub.size());
  for (std::size_t p = 0; p < sub.size(); ++p) {
    to_parent[p] = *parent.index_of(sub.bits(p));
    labels[p] = parent.label(to_parent[p]);
  }
  sub = FiniteBModule::trusted(sub.data_->bits, std::move(labels), sub.data_->generators);
  std::vector<std::size_t> action(g.order() * sub.size());
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t p = 0; p < sub.size(); ++p) {
      action[x * sub.size() + p] = *sub.index_of(parent.bits(m.act(x, to_parent[p])));
    }
  }
  return BGModule(std::move(sub), g, std::move(action));
}

BGModule cyclic_submodule_of_free(const FiniteGroup& g, std::size_t k, const Bits& generator) {
  if (generator.width() != k * g.order()) throw ValidationError("generator has the wrong width for B[G]^k");
  const GSet coords = regular_power_gset(g, k);
  std::vector<Bits> orbit;
  for (Element x = 0; x < g.order(); ++x) orbit.push_back(permute_bits(coords, x, generator));
  return BGModule::from_coordinate_action(closure_module(std::move(orbit), Bits(generator.width())), coords);
}

Subgroup element_stabilizer(const BGModule& m, std::size_t x) {
  std::vector<Element> fixing;
  for (Element g = 0; g < m.group().order(); ++g) {
    if (m.act(g, x) == x) fixing.push_back(g);
  }
  return Subgroup::from_elements(m.group(), std::move(fixing));
}

BGModule dual_bg_module(const BGModule& m) {
  const DualModule d = dual(m.module());
  const FiniteGroup op = m.group().opposite();
  const std::size_t n = m.module().size();
  std::vector<std::size_t> action(op.order() * n);
  // (g . psi(y))(x) = psi(y)(g x) = [x not <= g^-1 y].
  for (Element g = 0; g < op.order(); ++g) {
    for (std::size_t y = 0; y < n; ++y) {
      action[g * n + d.psi[y]] = d.psi[m.act(m.group().inverse(g), y)];
    }
  }
  return BGModule::create(d.module, op, std::move(action));
}

AntichainCheck orbit_antichain_check(const BGModule& m) {
  const FiniteBModule& mod = m.module();
  for (std::size_t j : join_irreducibles(mod)) {
    for (Element g = 0; g < m.group().order(); ++g) {
      const std::size_t y = m.act(g, j);
      if (y == j) continue;
      if (mod.leq(j, y)) return {false, std::pair{j, y}};
      if (mod.leq(y, j)) return {false, std::pair{y, j}};
    }
  }
  return {};
}

std::size_t max_chain_length_join_irreducibles(const BGModule& m) {
  return max_chain_length_join_irreducibles(m.module());
}

std::size_t generator_count(const BGModule& m, std::size_t cap) {
  const FiniteBModule& mod = m.module();
  if (mod.size() == 1) throw ValidationError("generator_count: the zero module has no generators");
  const auto ji = join_irreducibles(mod);
  if (ji.size() > cap) {
    throw CapExceeded("generator_count: " + std::to_string(ji.size()) +
                      " join-irreducibles exceed the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<std::size_t>> orbit(ji.size());
  for (std::size_t i = 0; i < ji.size(); ++i) {
    for (Element g = 0; g < m.group().order(); ++g) orbit[i].push_back(m.act(g, ji[i]));
  }
  // S generates iff every join-irreducible is the join of the translates of S below it.
  auto generates = [&](std::uint64_t mask) {
    for (std::size_t t : ji) {
      Bits u = mod.bits(mod.bottom());
      for (std::size_t i = 0; i < ji.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t y : orbit[i]) {
          if (mod.leq(y, t)) u |= mod.bits(y);
        }
      }
      if (u != mod.bits(t)) return false;
    }
    return true;
  };
  for (std::size_t size = 1; size <= ji.size(); ++size) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ji.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == size && generates(mask)) return size;
    }
  }
  throw std::logic_error("generator_count: join-irreducibles do not generate");
}

RegularEmbedding embed_into_regular_power(const BGModule& m) {
  const FiniteBModule& mod = m.module();
  const FiniteGroup& g = m.group();
  const auto mi = meet_irreducibles(mod);
  std::vector<bool> covered(mod.size(), false);
  RegularEmbedding out{g, 0, {}, {}};
  for (std::size_t x : mi) {
    if (covered[x]) continue;
    out.meet_irreducible_representatives.push_back(x);
    for (Element h = 0; h < g.order(); ++h) covered[m.act(h, x)] = true;
  }
  out.copies = out.meet_irreducible_representatives.size();
  const std::size_t n = g.order();
  out.images.reserve(mod.size());
  for (std::size_t x = 0; x < mod.size(); ++x) {
    Bits image(out.copies * n);
    for (std::size_t i = 0; i < out.copies; ++i) {
      for (Element h = 0; h < n; ++h) {
        if (!mod.leq(m.act(g.inverse(h), x), out.meet_irreducible_representatives[i])) image.set(i * n + h);
      }
    }
    out.images.push_back(std::move(image));
  }
  return out;
}

EmbeddingCheck verify_embedding(const BGModule& m, const RegularEmbedding& e) {
  const FiniteBModule& mod = m.module();
  EmbeddingCheck out;
  const std::size_t width = e.copies * m.group().order();
  if (!(e.group == m.group()) || e.images.size() != mod.size()) return out;
  for (const auto& b : e.images) {
    if (b.width() != width) return out;
  }
  std::unordered_set<Bits, BitsHash> distinct(e.images.begin(), e.images.end());
  out.injective = distinct.size() == e.images.size();

  const GSet coords = regular_power_gset(m.group(), e.copies);
  out.equivariant = true;
  for (Element g = 0; g < m.group().order() && out.equivariant; ++g) {
    for (std::size_t x = 0; x < mod.size() && out.equivariant; ++x) {
      out.equivariant = e.images[m.act(g, x)] == permute_bits(coords, g, e.images[x]);
    }
  }
  // Checking joins with join-irreducibles suffices: they generate under joins.
  out.preserves_join = e.images[mod.bottom()].none();
  const auto ji = join_irreducibles(mod);
  for (std::size_t x = 0; x < mod.size() && out.preserves_join; ++x) {
    for (std::size_t j : ji) {
      if (e.images[mod.join(x, j)] != (e.images[x] | e.images[j])) {
        out.preserves_join = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace idemrep
