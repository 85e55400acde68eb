#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "isf/chromatic.hpp"
#include "isf/error.hpp"
#include "isf/forest_enumeration.hpp"
#include "isf/json_io.hpp"
#include "isf/local_injection.hpp"
#include "isf/stirling.hpp"
#include "isf/subset_injection.hpp"

namespace isf::cli {

namespace {

struct Outcome {
  Json payload;
  bool ok = true;
  std::vector<std::string> diagnostics;
};

using Handler = std::function<Outcome()>;

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  Json read(const std::string& path) {
    try {
      if (path == "-") return Json::parse(in_);
      std::ifstream f(path);
      if (!f) throw Error(Errc::invalid_input, "cannot open " + path);
      return Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw Error(Errc::invalid_input, "malformed JSON in " + path + ": " + e.what());
    }
  }

 private:
  std::istream& in_;
};

// Accepts "1,2,3", "[1,2,3]", "{1, 2, 3}" or "1 2 3"; "" and "{}" are empty.
std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '[' || c == ']' || c == '{' || c == '}') ? ' ' : c;
  std::istringstream is(cleaned);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(Errc::invalid_input, "'" + tok + "' in \"" + text + "\" is not an integer");
    out.push_back(v);
  }
  return out;
}

Subset parse_subset(const std::string& text) { return subset_from_json(Json(parse_int_list(text))); }

PhiRule parse_rule(const std::string& s) { return s == "reversed" ? PhiRule::reversed_bracket : PhiRule::bracket; }

BrokenCircuitConvention parse_convention(const std::string& s) {
  return s == "max" ? BrokenCircuitConvention::remove_max : BrokenCircuitConvention::remove_min;
}

std::string convention_name(BrokenCircuitConvention c) {
  return c == BrokenCircuitConvention::remove_min ? "min" : "max";
}

Json report(const std::string& command, bool ok, Json payload, const std::vector<std::string>& diagnostics) {
  return Json{{"command", command}, {"ok", ok}, {"payload", std::move(payload)}, {"diagnostics", diagnostics}};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Inputs inputs(in);

  CLI::App app{"Increasing spanning forests: enumeration, local injections and their certificates", "isf"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 1;
  std::string output = "json";
  app.add_option("--jobs", jobs, "Worker threads for exhaustive checks")->check(CLI::Range(1u, 256u));
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json"}));

  // Leaf subcommand -> (report name, handler).
  std::map<const CLI::App*, std::pair<std::string, Handler>> handlers;
  auto leaf = [&](CLI::App* sub, std::string name, Handler h) { handlers[sub] = {std::move(name), std::move(h)}; };

  // Shared option storage; each leaf reads only what it registered.
  std::string graph_path, forest_path, forest_a_path, forest_b_path, perm_path, sigma_path, tau_path;
  std::string ground_text, subset_text, x_text, y_text, relabel_text;
  std::string rule = "bracket", convention = "min", pivot = "first";
  int components = 0, n_value = 0;
  std::optional<int> k_opt, l_opt, p_opt, q_opt;

  auto add_graph = [&](CLI::App* s) { s->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)")->required(); };
  auto add_rule = [&](CLI::App* s) {
    s->add_option("--phi", rule, "Subset injection: bracket or reversed")->check(CLI::IsMember({"bracket", "reversed"}));
  };
  auto graph = [&] { return graph_from_json(inputs.read(graph_path)); };
  auto forest_in = [&](const std::string& path, const OrderedGraph* g) {
    Forest f = forest_from_json(inputs.read(path));
    if (g && f.n() != g->n()) throw Error(Errc::invalid_input, path + " has n=" + std::to_string(f.n()) + " but the graph has n=" + std::to_string(g->n()));
    return f;
  };

  // enumerate
  {
    auto* s = app.add_subcommand("enumerate", "List increasing spanning forests with k components");
    add_graph(s);
    s->add_option("--components,-k", components, "Number of components")->required();
    leaf(s, "enumerate", [&] {
      const OrderedGraph g = graph();
      const auto forests = enumerate_if(g, components);
      Json list = Json::array();
      for (const Forest& f : forests) list.push_back(to_json(f.edges()));
      return Outcome{Json{{"n", g.n()}, {"k", components}, {"count", forests.size()}, {"forests", std::move(list)}}};
    });
  }

  // poly
  {
    auto* s = app.add_subcommand("poly", "Generating polynomial a_k(x), or ISF(x,t) when --k is omitted");
    add_graph(s);
    s->add_option("--k", k_opt, "Component count");
    leaf(s, "poly", [&] {
      const OrderedGraph g = graph();
      if (k_opt) {
        const MultiPoly p = a_poly(g, *k_opt);
        return Outcome{Json{{"k", *k_opt}, {"polynomial", to_json(p)}, {"text", to_string(p)}}};
      }
      return Outcome{Json{{"isf", to_json(isf_polynomial(g))}}};
    });
  }

  // phi
  {
    auto* s = app.add_subcommand("phi", "Apply the subset injection phi");
    s->add_option("--ground", ground_text, "Ground set, e.g. 1,2,3")->required();
    s->add_option("--subset", subset_text, "Subset of the ground set")->required();
    add_rule(s);
    leaf(s, "phi", [&] {
      const GroundSet ground(parse_int_list(ground_text));
      const Subset x = parse_subset(subset_text);
      const PhiRule r = parse_rule(rule);
      const Subset image = phi(ground, x, r);
      std::vector<int> order = ground.elements();
      if (r == PhiRule::reversed_bracket) std::reverse(order.begin(), order.end());
      return Outcome{Json{{"ground", ground.elements()},
                          {"subset", x},
                          {"image", image},
                          {"added", difference_of(image, x).front()},
                          {"bracket", to_json(bracket_state(order, x))}}};
    });
  }

  // subset-map
  {
    auto* s = app.add_subcommand("subset-map", "Apply the subset-pair map (X,Y) -> (X+i, Y-i)");
    s->add_option("--n", n_value, "Ambient set size")->required();
    s->add_option("--x", x_text, "Subset X")->required();
    s->add_option("--y", y_text, "Subset Y with |X| < |Y|")->required();
    add_rule(s);
    leaf(s, "subset-map", [&] {
      return Outcome{to_json(subset_pair_map(n_value, parse_subset(x_text), parse_subset(y_text), parse_rule(rule)))};
    });
  }

  // psi
  {
    auto* s = app.add_subcommand("psi", "Apply the local injection to a pair of increasing forests");
    add_graph(s);
    s->add_option("--forest-a", forest_a_path, "Forest with fewer components")->required();
    s->add_option("--forest-b", forest_b_path, "Forest with more components")->required();
    add_rule(s);
    leaf(s, "psi", [&] {
      const OrderedGraph g = graph();
      const Forest a = forest_in(forest_a_path, &g);
      const Forest b = forest_in(forest_b_path, &g);
      return Outcome{to_json(psi(g, a, b, parse_rule(rule)))};
    });
  }

  // verify psi
  {
    auto* v = app.add_subcommand("verify", "Exhaustive verification");
    v->require_subcommand(1);
    auto* s = v->add_subcommand("psi", "Check injectivity and locality over IF_k x IF_l (all k<l when omitted)");
    add_graph(s);
    s->add_option("--k", k_opt, "Components of the first forest");
    s->add_option("--l", l_opt, "Components of the second forest");
    add_rule(s);
    leaf(s, "verify psi", [&] {
      const OrderedGraph g = graph();
      if (k_opt.has_value() != l_opt.has_value()) throw Error(Errc::invalid_input, "--k and --l go together");
      std::vector<std::pair<int, int>> todo;
      if (k_opt) {
        todo.emplace_back(*k_opt, *l_opt);
      } else {
        for (int k = 0; k <= g.n(); ++k)
          for (int l = k + 1; l <= g.n(); ++l) todo.emplace_back(k, l);
      }
      Outcome o;
      Json runs = Json::array();
      for (auto [k, l] : todo) {
        const PsiVerification r = verify_psi(g, k, l, parse_rule(rule), jobs);
        if (!r.ok()) {
          o.ok = false;
          o.diagnostics.push_back("psi fails its invariants for k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
        runs.push_back(to_json(r));
      }
      o.payload = todo.size() == 1 ? runs[0] : Json{{"runs", std::move(runs)}};
      return o;
    });
  }

  // stirling
  {
    auto* st = app.add_subcommand("stirling", "Stirling numbers and the forest/permutation bijection");
    st->require_subcommand(1);
    auto* row = st->add_subcommand("row", "Row c(n,0..n) and s(n,0..n)");
    row->add_option("--n", n_value, "n")->required();
    leaf(row, "stirling row", [&] { return Outcome{to_json(stirling_row(n_value))}; });

    auto* tp = st->add_subcommand("to-perm", "Increasing forest of K_n -> permutation");
    tp->add_option("--forest", forest_path, "Forest JSON")->required();
    leaf(tp, "stirling to-perm", [&] { return Outcome{to_json(forest_to_permutation(forest_in(forest_path, nullptr)))}; });

    auto* tf = st->add_subcommand("to-forest", "Permutation -> increasing forest of K_n");
    tf->add_option("--perm", perm_path, "Permutation JSON")->required();
    leaf(tf, "stirling to-forest", [&] { return Outcome{to_json(permutation_to_forest(permutation_from_json(inputs.read(perm_path))))}; });

    auto* sp = st->add_subcommand("psi", "Break one cycle of sigma, glue two cycles of tau");
    sp->add_option("--sigma", sigma_path, "Permutation with fewer cycles")->required();
    sp->add_option("--tau", tau_path, "Permutation with more cycles")->required();
    add_rule(sp);
    leaf(sp, "stirling psi", [&] {
      const PermutationPsi r = permutation_psi(permutation_from_json(inputs.read(sigma_path)),
                                               permutation_from_json(inputs.read(tau_path)), parse_rule(rule));
      Outcome o{to_json(r)};
      if (!r.spectators_unchanged) {
        o.ok = false;
        o.diagnostics.push_back("cycle structure changed beyond one split and one merge");
      }
      return o;
    });
  }

  // chromatic
  {
    auto* s = app.add_subcommand("chromatic", "Chromatic polynomial by deletion-contraction");
    add_graph(s);
    s->add_option("--pivot", pivot, "Edge expanded first: first or last")->check(CLI::IsMember({"first", "last"}));
    leaf(s, "chromatic", [&] {
      return Outcome{to_json(chromatic_polynomial(graph(), pivot == "last" ? PivotRule::last_edge : PivotRule::first_edge))};
    });
  }

  // nbc
  {
    auto* s = app.add_subcommand("nbc", "Broken circuits, NBC forests and the admissibility table");
    add_graph(s);
    s->add_option("--convention", convention, "Edge removed from each circuit: min or max")->check(CLI::IsMember({"min", "max"}));
    leaf(s, "nbc", [&] {
      const OrderedGraph g = graph();
      const BrokenCircuitConvention c = parse_convention(convention);
      Json broken = Json::array();
      for (const EdgeList& bc : broken_circuits(g, c)) broken.push_back(to_json(bc));
      Json nbc = Json::array();
      Json table = Json::array();
      for (const AdmissibilityRow& r : admissibility_table(g)) {
        if (c == BrokenCircuitConvention::remove_min ? r.nbc_min : r.nbc_max) nbc.push_back(to_json(r.forest.edges()));
        table.push_back(to_json(r));
      }
      return Outcome{Json{{"convention", convention_name(c)},
                          {"broken_circuits", std::move(broken)},
                          {"nbc_forests", std::move(nbc)},
                          {"table", std::move(table)}}};
    });
  }

  // admissible
  {
    auto* s = app.add_subcommand("admissible", "Good-vertex admissibility of one forest");
    add_graph(s);
    s->add_option("--forest", forest_path, "Forest JSON")->required();
    leaf(s, "admissible", [&] {
      const OrderedGraph g = graph();
      const Forest f = forest_in(forest_path, &g);
      return Outcome{Json{{"forest", to_json(f)},
                          {"good_vertex", is_admissible_goodvertex(g, f)},
                          {"nbc_min", is_nbc(g, f, BrokenCircuitConvention::remove_min)},
                          {"nbc_max", is_nbc(g, f, BrokenCircuitConvention::remove_max)}}};
    });
  }

  // search-movable
  {
    auto* s = app.add_subcommand("search-movable", "Look for admissible pairs without a movable edge");
    add_graph(s);
    s->add_option("--relabel", relabel_text, "Vertex v becomes the v-th entry, e.g. 1,3,4,2");
    leaf(s, "search-movable", [&] {
      std::optional<std::vector<int>> perm;
      if (!relabel_text.empty()) perm = parse_int_list(relabel_text);
      return Outcome{to_json(movable_edge_search(graph(), perm, jobs))};
    });
  }

  // check
  {
    auto* ch = app.add_subcommand("check", "Identity and inequality certificates");
    ch->require_subcommand(1);

    auto* fac = ch->add_subcommand("factorization", "ISF(x,t) equals its product form");
    add_graph(fac);
    leaf(fac, "check factorization", [&] {
      const FactorizationCheck r = isf_factorization_check(graph());
      Outcome o{to_json(r), r.equal};
      if (!r.equal) o.diagnostics.push_back("ISF(x,t) differs from its product form");
      return o;
    });

    auto* lc = ch->add_subcommand("logconcavity", "a_p a_q - a_{p-1} a_{q+1} >= 0 coefficientwise");
    add_graph(lc);
    lc->add_option("--p", p_opt, "p (all 0<p<=q<n when omitted)");
    lc->add_option("--q", q_opt, "q");
    leaf(lc, "check logconcavity", [&] {
      const OrderedGraph g = graph();
      if (p_opt.has_value() != q_opt.has_value()) throw Error(Errc::invalid_input, "--p and --q go together");
      std::vector<std::pair<int, int>> todo;
      if (p_opt) {
        todo.emplace_back(*p_opt, *q_opt);
      } else {
        for (int p = 1; p < g.n(); ++p)
          for (int q = p; q < g.n(); ++q) todo.emplace_back(p, q);
      }
      const TPoly isf = isf_polynomial(g);
      Outcome o;
      Json results = Json::array();
      for (auto [p, q] : todo) {
        const NonnegReport r = strong_logconcavity_check(isf, p, q);
        Json entry = to_json(r);
        entry["p"] = p;
        entry["q"] = q;
        results.push_back(std::move(entry));
        if (!r.is_nonneg) {
          o.ok = false;
          o.diagnostics.push_back("negative coefficient for p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
      }
      o.payload = Json{{"results", std::move(results)}};
      return o;
    });

    auto* wh = ch->add_subcommand("whitney", "NBC forest counts equal the chromatic coefficients");
    add_graph(wh);
    wh->add_option("--convention", convention, "min or max")->check(CLI::IsMember({"min", "max"}));
    leaf(wh, "check whitney", [&] {
      const WhitneyCheck r = whitney_check(graph(), parse_convention(convention));
      Outcome o{to_json(r), r.equal};
      o.payload["convention"] = convention_name(parse_convention(convention));
      if (!r.equal) o.diagnostics.push_back("NBC counts differ from the chromatic coefficients");
      return o;
    });

    auto* peo = ch->add_subcommand("peo", "ISF(1,t) against (-1)^n P_G(-t)");
    add_graph(peo);
    leaf(peo, "check peo", [&] {
      const PeoCheck r = peo_isf_check(graph());
      // The identity is expected to fail exactly when the natural order is
      // not a perfect elimination order.
      Outcome o{to_json(r), r.holds == r.peo_condition};
      if (!o.ok) o.diagnostics.push_back("identity and perfect-elimination condition disagree");
      return o;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string command;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    out << report("help", true, nullptr, {}).dump(2) << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    out << report(command, false, nullptr, {std::string("usage: ") + e.what()}).dump(2) << '\n';
    return kBadInput;
  }

  const CLI::App* node = &app;
  while (true) {
    auto subs = node->get_subcommands();
    if (subs.empty()) break;
    node = subs.front();
  }
  auto it = handlers.find(node);
  if (it == handlers.end()) {
    err << "usage error: incomplete command\n";
    out << report(command, false, nullptr, {"usage: incomplete command"}).dump(2) << '\n';
    return kBadInput;
  }
  command = it->second.first;

  try {
    Outcome o = it->second.second();
    out << report(command, o.ok, std::move(o.payload), o.diagnostics).dump(2) << '\n';
    return o.ok ? kOk : kPropertyFailed;
  } catch (const Error& e) {
    err << command << ": " << e.what() << '\n';
    out << report(command, false, Json{{"error", std::string(to_string(e.code()))}}, {e.what()}).dump(2) << '\n';
    return kBadInput;
  }
}

}  // namespace isf::cli
