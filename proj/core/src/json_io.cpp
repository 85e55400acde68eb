#include "isf/json_io.hpp"

#include <string>

#include "isf/error.hpp"

namespace isf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::invalid_input, what); }

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer, got " + j.dump());
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\", got " + j.dump());
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

EdgeList edges_from_json(const Json& j) {
  if (!j.is_array()) bad("\"edges\" must be an array");
  EdgeList edges;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) bad("edge " + e.dump() + " must be a pair [i,j]");
    edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }
  return edges;
}

Var var_from_json(const Json& j) {
  if (j.is_number_integer()) return Var::index(j.get<int>());
  if (j.is_array() && j.size() == 2) {
    const int a = as_int(j[0], "variable index"), b = as_int(j[1], "variable index");
    if (!(0 < a && a < b)) bad("edge variable " + j.dump() + " must be [i,j] with 0<i<j");
    return Var::edge({a, b});
  }
  bad("variable " + j.dump() + " must be an index or an edge pair");
}

Json bigint_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

OrderedGraph graph_from_json(const Json& j) {
  return OrderedGraph(as_int(field(j, "n"), "\"n\""), edges_from_json(field(j, "edges")));
}

Forest forest_from_json(const Json& j) {
  return Forest(as_int(field(j, "n"), "\"n\""), edges_from_json(field(j, "edges")));
}

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) bad("subset must be an array, got " + j.dump());
  Subset s;
  for (const Json& x : j) s.push_back(as_int(x, "subset element"));
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1])) bad("subset " + j.dump() + " must be strictly increasing positive integers");
  return s;
}

Permutation permutation_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "\"n\"");
  const Json& cj = field(j, "cycles");
  if (!cj.is_array()) bad("\"cycles\" must be an array");
  std::vector<Cycle> cycles;
  for (const Json& c : cj) {
    if (!c.is_array()) bad("cycle " + c.dump() + " must be an array");
    Cycle cyc;
    for (const Json& v : c) cyc.push_back(as_int(v, "cycle entry"));
    cycles.push_back(std::move(cyc));
  }
  return Permutation(n, std::move(cycles));
}

MultiPoly poly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  MultiPoly p;
  for (const Json& t : terms) {
    const Json& vars = field(t, "vars");
    if (!vars.is_array()) bad("\"vars\" must be an array");
    Monomial m;
    for (const Json& v : vars) m.push_back(var_from_json(v));
    std::sort(m.begin(), m.end());
    const Json& cj = field(t, "coef");
    BigInt c;
    if (cj.is_string()) {
      if (c.set_str(cj.get<std::string>(), 10) != 0) bad("coefficient " + cj.dump() + " is not a decimal integer");
    } else if (cj.is_number_integer()) {
      c = BigInt(std::to_string(cj.get<long long>()));
    } else {
      bad("coefficient " + cj.dump() + " must be a decimal string");
    }
    p.add_term(std::move(m), c);
  }
  return p;
}

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const EdgeList& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

Json to_json(const OrderedGraph& g) { return Json{{"n", g.n()}, {"edges", to_json(g.edges())}}; }

Json to_json(const Forest& f) { return Json{{"n", f.n()}, {"edges", to_json(f.edges())}}; }

Json to_json(const Subset& s) { return Json(s); }

Json to_json(const Var& v) { return v.is_edge() ? Json::array({v.i, v.j}) : Json(v.i); }

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (const Var& v : m) out.push_back(to_json(v));
  return out;
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"vars", to_json(m)}, {"coef", c.get_str()}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const TPoly& p) {
  Json coeffs = Json::array();
  for (const MultiPoly& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", std::move(coeffs)}, {"text", to_string(p)}};
}

Json to_json(const NonnegReport& r) {
  Json out{{"is_nonneg", r.is_nonneg}, {"witness", nullptr}};
  if (r.witness) out["witness"] = Json{{"vars", to_json(r.witness->first)}, {"coef", r.witness->second.get_str()}};
  return out;
}

Json to_json(const BracketState& s) {
  std::string word;
  for (bool o : s.open) word += o ? '(' : ')';
  Json matched = Json::array();
  for (auto [a, b] : s.matched) matched.push_back(Json::array({a, b}));
  return Json{{"word", word},
              {"matched", std::move(matched)},
              {"unmatched_close", s.unmatched_close},
              {"unmatched_open", s.unmatched_open}};
}

Json to_json(const SubsetPairImage& img) { return Json{{"i", img.moved}, {"x_prime", img.x}, {"y_prime", img.y}}; }

Json to_json(const FactorizationCheck& c) {
  return Json{{"equal", c.equal}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
}

Json to_json(const PsiTrace& t) {
  return Json{{"m_a", t.minima_a},         {"m_b", t.minima_b},          {"sym_diff", t.sym_diff},
              {"j", t.j},                  {"a_component", t.a_component}, {"b_component", t.b_component},
              {"i0", t.i0},                {"e", to_json(t.moved)},      {"a_out", to_json(t.a_out)},
              {"b_out", to_json(t.b_out)}};
}

Json to_json(const PsiVerification& v) {
  Json collisions = Json::array();
  for (const PsiCollision& c : v.collisions) {
    collisions.push_back(Json{{"first", Json::array({to_json(c.a1), to_json(c.b1)})},
                              {"second", Json::array({to_json(c.a2), to_json(c.b2)})},
                              {"image", Json::array({to_json(c.a_out), to_json(c.b_out)})}});
  }
  return Json{{"k", v.k},
              {"l", v.l},
              {"total_pairs", v.total_pairs},
              {"injective", v.injective},
              {"local", v.local},
              {"weight_preserving", v.weight_preserving},
              {"increasing", v.increasing},
              {"minima_preserved", v.minima_preserved},
              {"collisions", std::move(collisions)}};
}

Json to_json(const Permutation& p) {
  return Json{{"n", p.n()}, {"cycles", p.cycles()}, {"text", to_string(p)}};
}

Json to_json(const StirlingRow& r) {
  return Json{{"n", r.n}, {"unsigned", bigint_list(r.unsigned_counts)}, {"signed", bigint_list(r.signed_counts)}};
}

Json to_json(const PermutationPsi& p) {
  return Json{{"sigma_p", to_json(p.sigma_p)},
              {"tau_p", to_json(p.tau_p)},
              {"broken_cycle", p.broken_cycle},
              {"split_into", Json::array({p.split_into.first, p.split_into.second})},
              {"glued_pair", Json::array({p.glued_pair.first, p.glued_pair.second})},
              {"glued_into", p.glued_into},
              {"spectators_unchanged", p.spectators_unchanged},
              {"trace", to_json(p.trace)}};
}

Json to_json(const IntPoly& p) {
  return Json{{"coeffs", bigint_list(p.coeffs())}, {"text", to_string(p)}};
}

Json to_json(const WhitneyCheck& w) {
  return Json{{"counts", bigint_list(w.counts)},
              {"coeffs", bigint_list(w.coeffs)},
              {"goodvertex_counts", bigint_list(w.goodvertex_counts)},
              {"equal", w.equal}};
}

Json to_json(const AdmissibilityRow& r) {
  return Json{{"forest", to_json(r.forest.edges())},
              {"components", r.forest.component_count()},
              {"nbc_min", r.nbc_min},
              {"nbc_max", r.nbc_max},
              {"good_vertex", r.good_vertex}};
}

Json to_json(const MovableSearch& s) {
  Json failures = Json::array();
  for (const auto& [a, b] : s.failures) failures.push_back(Json{{"a", to_json(a.edges())}, {"b", to_json(b.edges())}});
  return Json{{"graph", to_json(s.graph)},
              {"admissible_forests", s.admissible_forests},
              {"pairs_checked", s.pairs_checked},
              {"all_pairs_ok", s.all_pairs_ok},
              {"failures", std::move(failures)}};
}

Json to_json(const PeoCheck& c) {
  return Json{{"holds", c.holds}, {"peo_condition", c.peo_condition}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
}

}  // namespace isf
