#include "idemrep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "idemrep/boolean_module.hpp"
#include "idemrep/config.hpp"
#include "idemrep/hom_spaces.hpp"
#include "idemrep/json_io.hpp"
#include "idemrep/representation.hpp"
#include "idemrep/verification.hpp"

namespace idemrep {

namespace {

using json_io::Json;

struct Options {
  std::string group = "";
  std::string semifield = "B";
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> caps_path;
  bool json = false;
  bool text = false;
  std::optional<std::string> out_path;
  std::string subgroup;
  std::string representation;
  std::string lattice;
  std::string generator;
  std::size_t copies = 1;
  std::size_t count = 0;
  std::string suite = "all";
  bool timings = false;
};

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

FiniteGroup load_group(const Options& o, const Caps& caps) {
  if (o.group.empty()) throw ParseError("--group is required");
  if (is_file(o.group)) return json_io::group_from_json(json_io::read_file(o.group));
  return named_group(o.group, caps.order_cap);
}

SemifieldTag semifield(const Options& o) { return parse_semifield_tag(o.semifield); }

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& arg) {
  std::vector<Element> gens;
  std::stringstream ss(arg);
  std::string token;
  while (std::getline(ss, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) continue;
    bool found = false;
    for (Element x = 0; x < g.order() && !found; ++x) {
      if (g.name_of(x) == token) {
        gens.push_back(x);
        found = true;
      }
    }
    if (!found && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const auto idx = std::stoul(token);
      if (idx < g.order()) {
        gens.push_back(static_cast<Element>(idx));
        found = true;
      }
    }
    if (!found) throw ParseError("unknown group element '" + token + "'");
  }
  return Subgroup::generated_by(g, gens);
}

FiniteBModule load_lattice(const std::string& arg, std::optional<BGModule>* bg = nullptr) {
  if (arg.empty()) throw ParseError("--lattice is required");
  if (is_file(arg)) {
    auto doc = json_io::lattice_from_json(json_io::read_file(arg));
    if (bg) *bg = doc.bg_module;
    return doc.module;
  }
  return named_lattice(arg);
}

Bits parse_generator(const std::string& s, std::size_t width) {
  if (s.size() != width) {
    throw ParseError("--generator needs " + std::to_string(width) + " digits (copies * |G|)");
  }
  Bits b(width);
  for (std::size_t i = 0; i < width; ++i) {
    if (s[i] != '0' && s[i] != '1') throw ParseError("--generator must be a string of 0 and 1");
    b.set(i, s[i] == '1');
  }
  return b;
}

std::string bits_string(const Bits& b) {
  std::string out;
  for (std::size_t i = 0; i < b.width(); ++i) out += b.test(i) ? '1' : '0';
  return out;
}

std::string matrix_text(const std::vector<std::vector<std::size_t>>& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < t[r].size(); ++c) out += (c ? "," : "") + std::to_string(t[r][c]);
    out += "]";
  }
  return out + "]";
}

std::string group_title(const FiniteGroup& g) {
  return (g.label().empty() ? std::string("group") : g.label()) + " (order " + std::to_string(g.order()) + ")";
}

// ---------------------------------------------------------------------------
// Verbs. Each returns the exit code and appends to `out`.

int cmd_classify(const Options& o, const Caps& caps, std::ostream& out) {
  const auto g = load_group(o, caps);
  const auto tag = semifield(o);
  const auto classified = classify_indecomposables(g, tag);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& c : classified) {
      rows.push_back({{"subgroup", c.tag.subgroup.elements()},
                      {"subgroup_names", c.tag.subgroup.to_string()},
                      {"subgroup_order", c.tag.subgroup.size()},
                      {"dim", c.representation.dim()}});
    }
    out << Json{{"group", g.label()}, {"order", g.order()}, {"semifield", to_string(tag)},
                {"indecomposables", rows}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << "indecomposables of " << group_title(g) << " over " << to_string(tag) << ": " << classified.size()
      << "\n";
  out << "dim\t|H|\tH\n";
  for (const auto& c : classified) {
    out << c.representation.dim() << "\t" << c.tag.subgroup.size() << "\t" << c.tag.subgroup.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_hom_table(const Options& o, const Caps& caps, std::ostream& out) {
  const auto g = load_group(o, caps);
  const auto tag = semifield(o);
  const auto classified = classify_indecomposables(g, tag);
  std::vector<std::vector<std::size_t>> table;
  Json pairs = Json::array();
  for (const auto& a : classified) {
    table.emplace_back();
    for (const auto& b : classified) {
      const auto space = hom_descriptor_space(a.tag, b.tag);
      table.back().push_back(space.size());
      std::vector<std::string> reps;
      for (Element r : space.representatives) reps.push_back(g.name_of(r));
      pairs.push_back({{"source_dim", a.representation.dim()},
                       {"target_dim", b.representation.dim()},
                       {"double_cosets", space.size()},
                       {"representatives", reps}});
    }
  }
  if (o.json) {
    Json tags = Json::array();
    for (const auto& c : classified) tags.push_back({{"subgroup", c.tag.subgroup.to_string()}, {"dim", c.representation.dim()}});
    out << Json{{"group", g.label()}, {"semifield", to_string(tag)}, {"indecomposables", tags},
                {"table", table}, {"pairs", pairs}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << "hom-table of " << group_title(g) << " over " << to_string(tag)
      << " (entry [V][W] = number of double cosets H_V\\G/H_W)\n";
  for (std::size_t i = 0; i < classified.size(); ++i) {
    out << "V" << i << "\tdim " << classified[i].representation.dim() << "\tH = "
        << classified[i].tag.subgroup.to_string() << "\n";
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
    out << "\n";
  }
  out << matrix_text(table) << "\n";
  return kExitOk;
}

Representation load_representation(const Options& o, const Caps& caps) {
  if (!o.representation.empty()) return json_io::representation_from_json(json_io::read_file(o.representation));
  const auto g = load_group(o, caps);
  const auto h = o.subgroup.empty() ? Subgroup::trivial(g) : parse_subgroup(g, o.subgroup);
  const auto tag = semifield(o);
  return induce_from_pair(g, tag, h, Character::trivial(h, tag));
}

int cmd_decompose(const Options& o, const Caps& caps, std::ostream& out) {
  const auto v = load_representation(o, caps);
  const auto summands = decompose(v);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& s : summands) {
      const auto tag = stabilizer_pair(s.representation, 0);
      rows.push_back({{"basis", s.basis}, {"dim", s.representation.dim()}, {"subgroup", tag.subgroup.to_string()}});
    }
    out << Json{{"dim", v.dim()}, {"summands", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "representation of dim " << v.dim() << " splits into " << summands.size() << " indecomposable(s)\n";
  for (const auto& s : summands) {
    std::string basis;
    for (Point p : s.basis) basis += (basis.empty() ? "" : ",") + std::to_string(p);
    out << "dim " << s.representation.dim() << "\tbasis {" << basis << "}\tH = "
        << stabilizer_pair(s.representation, 0).subgroup.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_induce(const Options& o, const Caps& caps, std::ostream& out) {
  const auto g = load_group(o, caps);
  const auto tag = semifield(o);
  const auto h = o.subgroup.empty() ? Subgroup::trivial(g) : parse_subgroup(g, o.subgroup);
  const auto v = induce_from_pair(g, tag, h, Character::trivial(h, tag));
  if (o.text) {
    out << "induced from H = " << h.to_string() << ": dim " << v.dim() << "\n";
    for (Element x = 0; x < g.order(); ++x) out << g.name_of(x) << "\t" << v.image(x).to_string() << "\n";
    return kExitOk;
  }
  out << json_io::to_json(v).dump(2) << "\n";
  return kExitOk;
}

int cmd_dual(const Options& o, const Caps&, std::ostream& out) {
  const auto m = load_lattice(o.lattice);
  const auto d = dual(m);
  const auto dd = double_dual_canonical(m);
  if (o.json) {
    out << Json{{"dual", json_io::to_json(d.module)}, {"psi", d.psi}, {"reflexive", dd.is_isomorphism()},
                {"weakly_reflexive", dd.is_monomorphism()}, {"homs_to_B", d.module.size()}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << "dual of a lattice with " << m.size() << " elements; |Hom(M, B)| = " << d.module.size() << "\n";
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::string above;
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (y != x && d.module.leq(d.psi[x], d.psi[y])) above += (above.empty() ? "" : ", ") + d.module.label(d.psi[y]);
    }
    out << d.module.label(d.psi[x]) << " <= {" << above << "}\n";
  }
  out << "canonical map to the double dual: " << (dd.is_isomorphism() ? "isomorphism" : "not an isomorphism")
      << "\n";
  return kExitOk;
}

int cmd_quasi_free(const Options& o, const Caps& caps, std::ostream& out) {
  const auto m = load_lattice(o.lattice);
  const auto result = quasi_basis_search(m, caps.quasi_basis_fallback);
  if (const auto* b = std::get_if<QuasiBasis>(&result)) {
    std::vector<std::string> labels;
    for (auto x : b->elements) labels.push_back(m.label(x));
    if (o.json) {
      out << Json{{"quasi_free", true}, {"rank", b->rank()}, {"basis", labels}}.dump(2) << "\n";
    } else {
      std::string s;
      for (const auto& l : labels) s += (s.empty() ? "" : ", ") + l;
      out << "quasi-free of rank " << b->rank() << " with quasi-basis {" << s << "}\n";
    }
    return kExitOk;
  }
  const auto& nq = std::get<NotQuasiFree>(result);
  if (o.json) {
    out << Json{{"quasi_free", false}, {"witness", nq.witness}}.dump(2) << "\n";
  } else {
    out << "not quasi-free: " << nq.witness << "\n";
  }
  return kExitOk;
}

int cmd_irreducibles(const Options& o, const Caps&, std::ostream& out) {
  const auto m = load_lattice(o.lattice);
  const auto ji = join_irreducibles(m);
  std::vector<std::string> labels;
  for (auto x : ji) labels.push_back(m.label(x));
  const auto chain_len = max_chain_length_join_irreducibles(m);
  if (o.json) {
    out << Json{{"join_irreducibles", labels}, {"max_chain_length", chain_len}, {"atomistic", is_atomistic(m)}}.dump(2)
        << "\n";
    return kExitOk;
  }
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ", ") + l;
  out << "join-irreducibles: {" << s << "}\nlongest chain: " << chain_len << "\n";
  return kExitOk;
}

BGModule load_bg_module(const Options& o, const Caps& caps) {
  if (!o.lattice.empty()) {
    std::optional<BGModule> bg;
    const auto m = load_lattice(o.lattice, &bg);
    if (bg) return *bg;
    return BGModule::trivial_action(m, load_group(o, caps));
  }
  const auto g = load_group(o, caps);
  if (o.generator.empty()) return free_module(g, o.copies, caps.free_module_bits);
  return cyclic_submodule_of_free(g, o.copies, parse_generator(o.generator, o.copies * g.order()));
}

int cmd_embed(const Options& o, const Caps& caps, std::ostream& out) {
  const auto m = load_bg_module(o, caps);
  const auto e = embed_into_regular_power(m);
  const auto check = verify_embedding(m, e);
  if (o.json) {
    Json images = Json::array();
    for (const auto& b : e.images) images.push_back(bits_string(b));
    out << Json{{"copies", e.copies}, {"labels", m.module().labels()}, {"images", images},
                {"injective", check.injective}, {"equivariant", check.equivariant},
                {"preserves_join", check.preserves_join}}.dump(2)
        << "\n";
  } else {
    out << "embedding into B[G]^" << e.copies << " (coordinate i*|G|+h)\n";
    for (std::size_t x = 0; x < m.module().size(); ++x) {
      out << m.module().label(x) << "\t-> " << bits_string(e.images[x]) << "\n";
    }
    out << "injective: " << (check.injective ? "yes" : "no") << ", equivariant: " << (check.equivariant ? "yes" : "no")
        << ", join-preserving: " << (check.preserves_join ? "yes" : "no") << "\n";
  }
  return check.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_cyclic(const Options& o, const Caps& caps, std::ostream& out) {
  const auto g = load_group(o, caps);
  std::vector<std::pair<std::size_t, Bits>> gens;
  if (!o.generator.empty()) {
    gens.emplace_back(o.copies, parse_generator(o.generator, o.copies * g.order()));
  } else {
    std::mt19937_64 rng(o.seed);
    gens = random_cyclic_generators(g.order(), rng, o.count ? o.count : caps.cyclic_generators_per_group);
  }
  bool all_ok = true;
  for (const auto& [k, gen] : gens) {
    const auto m = cyclic_submodule_of_free(g, k, gen);
    const std::size_t index = g.order() / element_stabilizer(m, *m.module().index_of(gen)).size();
    const auto result = quasi_basis_search(m.module(), caps.quasi_basis_fallback);
    const auto* b = std::get_if<QuasiBasis>(&result);
    const bool ok = b != nullptr && b->rank() == index;
    all_ok = all_ok && ok;
    if (o.json) {
      out << Json{{"copies", k}, {"generator", bits_string(gen)}, {"size", m.module().size()},
                  {"stabilizer_index", index}, {"quasi_free", b != nullptr},
                  {"rank", b ? Json(b->rank()) : Json(nullptr)}, {"pass", ok}}.dump()
          << "\n";
    } else {
      out << "k=" << k << " " << bits_string(gen) << "\t|M|=" << m.module().size() << "\t[G:Stab]=" << index
          << "\t" << (b ? "quasi-free rank " + std::to_string(b->rank()) : std::string("not quasi-free")) << "\t"
          << (ok ? "pass" : "FAIL") << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& o, const Caps& caps, std::ostream& out) {
  const auto reports = run_verification(o.suite, o.seed, caps);
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    out << json_io::to_json(r, o.timings).dump() << "\n";
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const Options& o, const Caps& caps, std::ostream& out) {
  if (!o.lattice.empty()) {
    std::optional<BGModule> bg;
    const auto m = load_lattice(o.lattice, &bg);
    out << (bg ? json_io::to_json(*bg) : json_io::to_json(m)).dump(2) << "\n";
  } else if (!o.representation.empty() || !o.subgroup.empty()) {
    out << json_io::to_json(load_representation(o, caps)).dump(2) << "\n";
  } else {
    out << json_io::to_json(load_group(o, caps)).dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Representations of finite groups over idempotent semifields", "idemrep"};
  app.require_subcommand(1);
  Options o;
  std::ostringstream out, err;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Named group (C4, S3, D4, Q8, A4, ...) or a group JSON file");
    sub->add_option("--semifield", o.semifield, "B or T")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for randomized suites")->capture_default_str();
    sub->add_option("--caps", o.caps_path, "JSON file overriding search caps");
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* t = sub->add_flag("--text", o.text, "Text output");
    j->excludes(t);
    sub->add_option("--out", o.out_path, "Write output to this file");
  };
  using Verb = int (*)(const Options&, const Caps&, std::ostream&);
  std::vector<std::pair<CLI::App*, Verb>> verbs;
  const auto verb = [&](const char* name, const char* help, Verb fn) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    verbs.emplace_back(sub, fn);
    return sub;
  };

  verb("classify", "List the indecomposables, one per subgroup class", cmd_classify);
  verb("hom-table", "Double-coset counts between indecomposables", cmd_hom_table);
  auto* dec = verb("decompose", "Split a representation into indecomposables", cmd_decompose);
  dec->add_option("--rep", o.representation, "Representation JSON file");
  dec->add_option("--subgroup", o.subgroup, "Comma-separated generators of H (for K[G/H])");
  auto* ind = verb("induce", "The indecomposable on G/H", cmd_induce);
  ind->add_option("--subgroup", o.subgroup, "Comma-separated generators of H");
  verb("dual", "Dual lattice and reflexivity", cmd_dual)->add_option("--lattice", o.lattice, "Named lattice or JSON file");
  verb("quasi-free", "Quasi-basis or a witness against one", cmd_quasi_free)
      ->add_option("--lattice", o.lattice, "Named lattice or JSON file");
  verb("irreducibles", "Join-irreducibles and their longest chain", cmd_irreducibles)
      ->add_option("--lattice", o.lattice, "Named lattice or JSON file");
  auto* emb = verb("embed", "Embed a B[G]-module into B[G]^n", cmd_embed);
  emb->add_option("--lattice", o.lattice, "Lattice JSON with an action");
  emb->add_option("--generator", o.generator, "0/1 string: cyclic submodule of B[G]^copies");
  emb->add_option("--copies", o.copies, "k in B[G]^k")->capture_default_str();
  auto* vc = verb("verify-cyclic", "Check cyclic B[G]-modules are quasi-free", cmd_verify_cyclic);
  vc->add_option("--generator", o.generator, "0/1 string; random generators when absent");
  vc->add_option("--copies", o.copies, "k in B[G]^k")->capture_default_str();
  vc->add_option("--count", o.count, "Number of random generators");
  auto* ver = verb("verify", "Run the oracle battery (JSON lines)", cmd_verify);
  ver->add_option("--suite", o.suite, "all or one suite name")->capture_default_str();
  ver->add_flag("--timings", o.timings, "Include elapsed_ms in reports");
  auto* exp = verb("export", "Emit group, representation or lattice JSON", cmd_export);
  exp->add_option("--lattice", o.lattice, "Named lattice or JSON file");
  exp->add_option("--rep", o.representation, "Representation JSON file");
  exp->add_option("--subgroup", o.subgroup, "Comma-separated generators of H (for K[G/H])");

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    const Caps caps = resolve_caps(o.caps_path);
    for (const auto& [sub, fn] : verbs) {
      if (sub->parsed()) result.exit_code = fn(o, caps, out);
    }
  } catch (const CapExceeded& e) {
    result.exit_code = kExitCap;
    err << "cap exceeded: " << e.what() << "\n";
  } catch (const ParseError& e) {
    result.exit_code = kExitParse;
    err << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    result.exit_code = kExitValidation;
    err << "validation failed: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    result.exit_code = kExitParse;
    err << "parse error: " << e.what() << "\n";
  }
  if (result.exit_code != kExitParse && result.exit_code != kExitCap && result.exit_code != kExitValidation &&
      o.out_path) {
    std::ofstream f(*o.out_path, std::ios::binary);
    if (!f) {
      result.exit_code = kExitParse;
      err << "cannot write " << *o.out_path << "\n";
    } else {
      f << out.str();
      result.out.clear();
      result.err = err.str();
      return result;
    }
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace idemrep
