// Command-line surface for the stable Green ring calculator.
//
// Subcommands:
//   product   evaluate a tensor expression and print its decomposition
//   table     emit all pairwise products of a bounded label universe
//   classify  report invariants and neighbors of a single label
//   verify    run the invariant suites, exit 1 on any violation
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greenring/enumerate.hpp"
#include "greenring/parse.hpp"
#include "greenring/serialize.hpp"
#include "greenring/threads.hpp"
#include "greenring/verify.hpp"

namespace {

using namespace greenring;

struct GlobalOpts {
  int64_t n{0};
  int64_t d{0};
  std::string format{"text"};
  std::string lambdas{"1,2,1/2"};
  int64_t max_ell{3};
  int64_t max_syzygy{3};
  uint64_t seed{0};
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Rational> parse_lambdas(const std::string& s) {
  std::vector<Rational> out;
  for (const std::string& item : split_csv(s)) out.push_back(rational_from_text(item));
  if (out.empty()) throw std::invalid_argument("--lambdas needs at least one rational");
  return out;
}

UniverseSpec spec_from(const GlobalOpts& g) {
  UniverseSpec spec;
  spec.max_ell = g.max_ell;
  spec.max_syzygy = g.max_syzygy;
  spec.lambdas = parse_lambdas(g.lambdas);
  return spec;
}

std::string render_core(const GreenElement& e, const char* sep, const char* empty) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, mult] : e.core)
    for (int64_t k = 0; k < mult; ++k) {
      if (!first) os << sep;
      os << to_text(l);
      first = false;
    }
  if (first) os << empty;
  return os.str();
}

std::string csv_quote(const std::string& s) {
  std::string out;
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json core_texts(const GreenElement& e) {
  json arr = json::array();
  for (const auto& [l, mult] : e.core)
    for (int64_t k = 0; k < mult; ++k) arr.push_back(to_text(l));
  return arr;
}

int require_text_or_json(const std::string& format) {
  if (format == "csv") {
    std::cerr << "error: csv output applies to the table subcommand only\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_product(const Params& p, const GlobalOpts& g, const std::string& expr) {
  if (int rc = require_text_or_json(g.format)) return rc;
  const GreenElement e = parse_expression(p, expr);
  if (g.format == "json")
    std::cout << element_to_json(p, e).dump(2) << "\n";
  else
    std::cout << "core: " << render_core(e, " + ", "(empty)") << "; proj_dim: " << e.proj_dim
              << "\n";
  return 0;
}

bool kind_selected(const std::set<std::string>& kinds, const ModLabel& l) {
  switch (l.kind) {
    case Kind::syzygy: return kinds.count(l.m == 0 ? "simples" : "syzygies") > 0;
    case Kind::string_plus:
    case Kind::string_minus: return kinds.count("strings") > 0;
    case Kind::band: return kinds.count("bands") > 0;
    case Kind::projective: return false;
  }
  return false;
}

int cmd_table(const Params& p, const GlobalOpts& g, const std::string& kinds_csv) {
  const std::set<std::string> allowed{"simples", "syzygies", "strings", "bands"};
  std::set<std::string> kinds;
  for (const std::string& k : split_csv(kinds_csv)) {
    if (!allowed.count(k)) throw std::invalid_argument("unknown kind in --kinds: " + k);
    kinds.insert(k);
  }
  if (kinds.empty()) throw std::invalid_argument("--kinds selects nothing");

  std::vector<ModLabel> labels;
  for (const ModLabel& l : enumerate_labels(p, spec_from(g)))
    if (kind_selected(kinds, l)) labels.push_back(l);

  const int64_t sz = static_cast<int64_t>(labels.size());
  std::vector<GreenElement> rows(static_cast<size_t>(sz * sz));
  parallel_for(sz, [&](int64_t a) {
    for (int64_t b = 0; b < sz; ++b)
      rows[static_cast<size_t>(a * sz + b)] = tensor_basis(p, labels[a], labels[b]);
  });

  if (g.format == "json") {
    json out;
    out["n"] = p.n;
    out["d"] = p.d;
    json jrows = json::array();
    for (int64_t a = 0; a < sz; ++a)
      for (int64_t b = 0; b < sz; ++b) {
        const GreenElement& e = rows[static_cast<size_t>(a * sz + b)];
        jrows.push_back({{"lhs", to_text(labels[a])},
                         {"rhs", to_text(labels[b])},
                         {"core", core_texts(e)},
                         {"proj_dim", e.proj_dim}});
      }
    out["rows"] = std::move(jrows);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "lhs,rhs,core,proj_dim\n";
    for (int64_t a = 0; a < sz; ++a)
      for (int64_t b = 0; b < sz; ++b) {
        const GreenElement& e = rows[static_cast<size_t>(a * sz + b)];
        std::cout << csv_quote(to_text(labels[a])) << ',' << csv_quote(to_text(labels[b])) << ','
                  << csv_quote(render_core(e, ";", "")) << ',' << e.proj_dim << "\n";
      }
  }
  return 0;
}

int cmd_classify(const Params& p, const GlobalOpts& g, const std::string& label_text,
                 bool dump_rep) {
  if (int rc = require_text_or_json(g.format)) return rc;
  const ModLabel l = parse_label(p, label_text);
  const Vertex block = block_representative(p, l.v);

  bool shiftable = l.kind != Kind::projective;
  std::string omega, omega_inv;
  if (shiftable) {
    omega = to_text(syzygy_shift(p, l, 1));
    omega_inv = to_text(syzygy_shift(p, l, -1));
  }

  json rep_json;
  bool have_rep = false;
  if (dump_rep) {
    try {
      rep_json = rep::rep_to_json(rep_of_label(p, l));
      have_rep = true;
    } catch (const LabelError&) {
      // simple blocks have no string-quiver presentation
    }
  }

  const bool endo = is_endotrivial(p, l);
  const bool split = is_splitting_trace(l);
  const bool alg = is_algebraic(l);

  if (g.format == "json") {
    json out;
    out["label"] = label_to_json(l);
    out["text"] = to_text(l);
    out["kind"] = kind_name(l.kind);
    out["dim"] = dim_of(p, l);
    out["length"] = length_of(p, l);
    out["block"] = {{"u", block.u}, {"i", block.i}};
    out["dual"] = to_text(dual(p, l));
    out["omega"] = shiftable ? json(omega) : json(nullptr);
    out["omega_inverse"] = shiftable ? json(omega_inv) : json(nullptr);
    out["endotrivial"] = endo;
    out["splitting_trace"] = split;
    out["algebraic"] = alg;
    if (dump_rep) out["rep"] = have_rep ? rep_json : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "label: " << to_text(l) << "\n"
              << "kind: " << kind_name(l.kind) << "\n"
              << "dim: " << dim_of(p, l) << "\n"
              << "length: " << length_of(p, l) << "\n"
              << "block: (" << block.u << "," << block.i << ")\n"
              << "dual: " << to_text(dual(p, l)) << "\n"
              << "omega: " << (shiftable ? omega : "n/a (projective)") << "\n"
              << "omega_inverse: " << (shiftable ? omega_inv : "n/a (projective)") << "\n"
              << "endotrivial: " << yn(endo) << "\n"
              << "splitting_trace: " << yn(split) << "\n"
              << "algebraic: " << yn(alg) << "\n";
    if (dump_rep)
      std::cout << "rep: " << (have_rep ? rep_json.dump() : "n/a (simple block)") << "\n";
  }
  return 0;
}

int cmd_verify(const Params& p, const GlobalOpts& g, const std::string& suite, int64_t bounds,
               int64_t trials, bool inject_failure) {
  if (int rc = require_text_or_json(g.format)) return rc;
  VerifyOptions opt;
  opt.universe = spec_from(g);
  if (bounds > 0) {
    opt.universe.max_ell = bounds;
    opt.universe.max_syzygy = bounds;
  }
  opt.trials = trials;
  opt.seed = g.seed;

  SuiteResult r;
  if (suite == "ring")
    r = suite_ring(p, opt);
  else if (suite == "formulas")
    r = suite_formulas(p, opt);
  else if (suite == "classify")
    r = suite_classify(p, opt);
  else
    r = verify_all(p, opt);

  if (inject_failure) {
    // Testing aid for the exit-code contract: a correct build never fails a
    // real check, so the failure path gets its own switch.
    Check c;
    c.name = "injected-failure";
    c.pass = false;
    c.detail = "requested by --inject-failure";
    r.checks.push_back(std::move(c));
  }

  if (g.format == "json") {
    json checks = json::array();
    for (const Check& c : r.checks)
      checks.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"seconds", c.seconds}, {"detail", c.detail}});
    json out{{"n", p.n}, {"d", p.d}, {"suite", suite}, {"pass", r.all_pass()},
             {"checks", std::move(checks)}};
    std::cout << out.dump(2) << "\n";
  } else {
    int64_t passed = 0;
    for (const Check& c : r.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << std::fixed
                << std::setprecision(2) << c.seconds << "s)";
      if (!c.pass) std::cout << ": " << c.detail;
      std::cout << "\n";
      if (c.pass) ++passed;
    }
    std::cout << passed << "/" << r.checks.size() << " checks passed\n";
  }
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the stable Green ring of a Drinfeld double"};
  app.require_subcommand(1);
  // Let global flags appear after the subcommand too.
  app.fallthrough(true);

  GlobalOpts g;
  app.add_option("--n", g.n, "quiver size (positive integer)")->required();
  app.add_option("--d", g.d, "nilpotency degree, must divide n")->required();
  app.add_option("--format", g.format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--lambdas", g.lambdas, "comma list of band parameters (default 1,2,1/2)");
  app.add_option("--max-ell", g.max_ell, "string/band size bound (default 3)");
  app.add_option("--max-syzygy", g.max_syzygy, "absolute syzygy degree bound (default 3)");
  app.add_option("--seed", g.seed, "seed for randomized checks");

  std::string expr;
  CLI::App* product = app.add_subcommand("product", "evaluate a tensor expression");
  product->add_option("expr", expr, "expression, e.g. \"L(0,1)*M+_{2}(0,0)\"")->required();

  std::string kinds = "simples,syzygies,strings,bands";
  CLI::App* table = app.add_subcommand("table", "emit all pairwise products");
  table->add_option("--kinds", kinds, "kinds to include: simples,syzygies,strings,bands");

  std::string label_text;
  bool dump_rep = false;
  CLI::App* classify = app.add_subcommand("classify", "report invariants of one label");
  classify->add_option("label", label_text, "label, e.g. \"C_{2,3/2}(0,1)\"")->required();
  classify->add_flag("--dump-rep", dump_rep, "include the block representation matrices");

  std::string suite = "all";
  int64_t bounds = 0;
  int64_t trials = 500;
  bool inject_failure = false;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", suite, "ring|formulas|classify|all (default all)")
      ->check(CLI::IsMember({"ring", "formulas", "classify", "all"}));
  verify->add_option("--bounds", bounds, "override both universe bounds");
  verify->add_option("--trials", trials, "random associativity triples (default 500)");
  verify->add_flag("--inject-failure", inject_failure, "append a deliberately failing check")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Params p(g.n, g.d);
    if (product->parsed()) return cmd_product(p, g, expr);
    if (table->parsed()) return cmd_table(p, g, kinds);
    if (classify->parsed()) return cmd_classify(p, g, label_text, dump_rep);
    if (verify->parsed()) return cmd_verify(p, g, suite, bounds, trials, inject_failure);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LabelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
