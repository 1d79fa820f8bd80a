#include "idemrep/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

namespace idemrep::oracle {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BoolMatrix from_pattern(std::size_t rows, std::size_t cols, std::uint64_t pattern) {
  BoolMatrix m(rows, std::vector<bool>(cols, false));
  for (std::size_t c = 0; c < rows * cols; ++c) m[c / cols][c % cols] = pattern >> c & 1;
  return m;
}

BoolMatrix bool_identity(std::size_t n) {
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return m;
}

/// Least upper bound of a and b in a raw order relation.
std::size_t raw_join(const std::vector<std::vector<bool>>& leq, std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!leq[a][u] || !leq[b][u]) continue;
    bool least = true;
    for (std::size_t v = 0; v < n && least; ++v) {
      if (leq[a][v] && leq[b][v]) least = leq[u][v];
    }
    if (least) return u;
  }
  throw ValidationError("oracle: pair without a join");
}

std::size_t raw_bottom(const std::vector<std::vector<bool>>& leq) {
  for (std::size_t b = 0; b < leq.size(); ++b) {
    if (std::all_of(leq[b].begin(), leq[b].end(), [](bool x) { return x; })) return b;
  }
  throw ValidationError("oracle: no least element");
}

std::uint64_t group_ring_product(const FiniteGroup& g, std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (!(a >> x & 1)) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (b >> y & 1) out |= std::uint64_t{1} << g.mul(x, y);
    }
  }
  return out;
}

}  // namespace

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  BoolMatrix out(rows, std::vector<bool>(cols, false));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (!a[r][k]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (b[k][c]) out[r][c] = true;
      }
    }
  }
  return out;
}

std::vector<BoolMatrix> enumerate_invertible_matrices(std::size_t n) {
  if (n > kMaxInvertibleSearchDim) {
    throw CapExceeded("enumerate_invertible_matrices: n above " + std::to_string(kMaxInvertibleSearchDim));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const BoolMatrix id = bool_identity(n);
  std::vector<BoolMatrix> all;
  for (std::uint64_t p = 0; p < total; ++p) all.push_back(from_pattern(n, n, p));
  std::vector<BoolMatrix> out;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (bool_product(a, b) == id && bool_product(b, a) == id) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

BoolMatrix raw_matrix(const MonomialMap& m) {
  BoolMatrix out(m.dim(), std::vector<bool>(m.dim(), false));
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (!m.scalars()[j].is_zero()) out[m.perm()[j]][j] = true;
  }
  return out;
}

std::vector<BoolMatrix> enumerate_equivariant_maps(const Representation& v, const Representation& w,
                                                   std::size_t cell_cap) {
  if (v.tag() != SemifieldTag::Boolean || w.tag() != SemifieldTag::Boolean) {
    throw ValidationError("oracle: equivariant map search needs Boolean representations");
  }
  const std::size_t cells = v.dim() * w.dim();
  if (cells > cell_cap) {
    throw CapExceeded("oracle: " + std::to_string(cells) + " matrix entries exceed the cap of " +
                      std::to_string(cell_cap));
  }
  // Matrices as row bitmasks: row r has bit c set iff entry (r, c) is 1.
  using Rows = std::vector<std::uint32_t>;
  const auto to_rows = [](const BoolMatrix& m) {
    Rows rows(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        if (m[r][c]) rows[r] |= std::uint32_t{1} << c;
      }
    }
    return rows;
  };
  const auto times = [](const Rows& a, const Rows& b) {
    Rows out(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[r] >> k & 1) out[r] |= b[k];
      }
    }
    return out;
  };
  const std::size_t order = v.group().order();
  std::vector<Rows> vs, ws;
  for (Element g = 0; g < order; ++g) {
    vs.push_back(to_rows(raw_matrix(v.image(g))));
    ws.push_back(to_rows(raw_matrix(w.image(g))));
  }
  std::vector<BoolMatrix> out;
  Rows m(w.dim());
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << cells); ++p) {
    for (std::size_t r = 0; r < w.dim(); ++r) {
      m[r] = static_cast<std::uint32_t>(p >> (r * v.dim()) & ((std::uint64_t{1} << v.dim()) - 1));
    }
    bool ok = true;
    for (Element g = 0; g < order && ok; ++g) ok = times(m, vs[g]) == times(ws[g], m);
    if (ok) out.push_back(from_pattern(w.dim(), v.dim(), p));
  }
  return out;
}

ModuleHoms enumerate_all_module_homs(const FiniteBModule& m, const FiniteBModule& n,
                                     std::uint64_t candidate_cap) {
  const auto lm = m.order_relation();
  const auto ln = n.order_relation();
  const std::size_t sm = lm.size(), sn = ln.size();
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < sm; ++i) {
    if (candidates > candidate_cap / sn) throw CapExceeded("oracle: too many candidate maps");
    candidates *= sn;
  }
  std::vector<std::vector<std::size_t>> jm(sm, std::vector<std::size_t>(sm));
  std::vector<std::vector<std::size_t>> jn(sn, std::vector<std::size_t>(sn));
  for (std::size_t a = 0; a < sm; ++a) {
    for (std::size_t b = 0; b < sm; ++b) jm[a][b] = raw_join(lm, a, b);
  }
  for (std::size_t a = 0; a < sn; ++a) {
    for (std::size_t b = 0; b < sn; ++b) jn[a][b] = raw_join(ln, a, b);
  }
  const std::size_t bm = raw_bottom(lm), bn = raw_bottom(ln);
  ModuleHoms out;
  out.candidates = candidates;
  std::vector<std::size_t> f(sm, 0);
  for (std::uint64_t c = 0; c < candidates; ++c) {
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < sm; ++i) {
      f[i] = rest % sn;
      rest /= sn;
    }
    if (f[bm] != bn) continue;
    bool ok = true;
    for (std::size_t a = 0; a < sm && ok; ++a) {
      for (std::size_t b = 0; b < sm && ok; ++b) ok = f[jm[a][b]] == jn[f[a]][f[b]];
    }
    if (ok) out.homs.push_back(f);
  }
  return out;
}

OracleReport exhaustive_zero_divisor_scan(const FiniteGroup& g, std::uint64_t seed, std::size_t samples) {
  const auto start = Clock::now();
  const std::size_t order = g.order();
  OracleReport r{"zero-divisor-free", g.label().empty() ? "group of order " + std::to_string(order) : g.label(),
                 true, std::nullopt, 0, 0};
  if (order > 63) throw CapExceeded("oracle: zero-divisor scan needs |G| < 64");
  const std::uint64_t top = (std::uint64_t{1} << order) - 1;
  auto check = [&](std::uint64_t a, std::uint64_t b) {
    ++r.search_size;
    if (r.pass && group_ring_product(g, a, b) == 0) {
      r.pass = false;
      r.counterexample = std::to_string(a) + " * " + std::to_string(b) + " = 0";
    }
  };
  if (order <= 3) {
    for (std::uint64_t a = 1; a <= top; ++a) {
      for (std::uint64_t b = 1; b <= top; ++b) check(a, b);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const std::uint64_t a = 1 + rng() % top;
      const std::uint64_t b = 1 + rng() % top;
      check(a, b);
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

OracleReport tropical_torsion_scan(std::uint64_t seed, std::size_t count, int n_max) {
  const auto start = Clock::now();
  OracleReport r{"tropical-torsion-free", std::to_string(count) + " rationals, n <= " + std::to_string(n_max),
                 true, std::nullopt, 0, 0};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    // Every fourth draw is the unit itself.
    const std::int64_t num = i % 4 == 0 ? 0 : static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 97);
    const Value a = Value::tropical(num, den);
    for (int n = 1; n <= n_max; ++n) {
      ++r.search_size;
      // a^n by repeated multiplication; the unit of T is the exponent 0.
      Value p = Value::one(SemifieldTag::TropicalRational);
      for (int k = 0; k < n; ++k) p = mul(p, a);
      const bool power_is_one = !p.is_zero() && p.exponent().numerator() == 0;
      if (power_is_one && num != 0 && r.pass) {
        r.pass = false;
        r.counterexample = a.to_string() + "^" + std::to_string(n) + " = 1";
      }
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

std::size_t brute_force_subgroup_class_count(const FiniteGroup& g) {
  const std::size_t order = g.order();
  if (order > kMaxSubgroupSearchOrder) throw CapExceeded("oracle: subgroup search above order 16");
  std::set<std::uint64_t> classes;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << order); ++s) {
    if (!(s & 1)) continue;
    bool closed = true;
    for (Element a = 0; a < order && closed; ++a) {
      if (!(s >> a & 1)) continue;
      for (Element b = 0; b < order && closed; ++b) {
        if (s >> b & 1) closed = s >> g.mul(a, b) & 1;
      }
    }
    if (!closed) continue;
    std::uint64_t least = s;
    for (Element x = 0; x < order; ++x) {
      std::uint64_t c = 0;
      for (Element a = 0; a < order; ++a) {
        if (s >> a & 1) c |= std::uint64_t{1} << g.mul(g.mul(x, a), g.inverse(x));
      }
      least = std::min(least, c);
    }
    classes.insert(least);
  }
  return classes.size();
}

bool gsets_isomorphic_bruteforce(const GSet& s, const GSet& t) {
  if (s.size() != t.size()) return false;
  if (s.size() > kMaxGSetBijectionSize) throw CapExceeded("oracle: G-set bijection search above 8 points");
  std::vector<Point> f(s.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (Element g = 0; g < s.group().order() && ok; ++g) {
      for (Point p = 0; p < s.size() && ok; ++p) ok = f[s.act(g, p)] == t.act(g, f[p]);
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

std::string to_string(const BoolMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (c) out += ",";
      out += m[r][c] ? "1" : "0";
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace idemrep::oracle
