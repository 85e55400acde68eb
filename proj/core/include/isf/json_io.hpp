#pragma once

#include <nlohmann/json.hpp>

#include "isf/chromatic.hpp"
#include "isf/forest_enumeration.hpp"
#include "isf/graph.hpp"
#include "isf/local_injection.hpp"
#include "isf/polynomial.hpp"
#include "isf/stirling.hpp"
#include "isf/subset_injection.hpp"

// JSON interchange formats.
//
//   graph / forest  {"n": 4, "edges": [[1,2],[2,4]]}      edges written i<j
//   subset          [1, 3, 4]                              strictly increasing
//   permutation     {"n": 3, "cycles": [[1,3,2]]}          canonical cycle form
//   polynomial      {"terms": [{"vars": [[1,2], 3], "coef": "2"}]}
//
// Polynomial terms appear in graded lexicographic order and coefficients are
// decimal strings. Readers throw Error(invalid_input) with a diagnostic.
namespace isf {

using Json = nlohmann::ordered_json;

OrderedGraph graph_from_json(const Json& j);
Forest forest_from_json(const Json& j);
Subset subset_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);

Json to_json(const Edge& e);
Json to_json(const EdgeList& edges);
Json to_json(const OrderedGraph& g);
Json to_json(const Forest& f);
Json to_json(const Subset& s);
Json to_json(const Var& v);
Json to_json(const Monomial& m);
Json to_json(const MultiPoly& p);
Json to_json(const TPoly& p);
Json to_json(const NonnegReport& r);
Json to_json(const BracketState& s);
Json to_json(const SubsetPairImage& img);
Json to_json(const FactorizationCheck& c);
Json to_json(const PsiTrace& t);
Json to_json(const PsiVerification& v);
Json to_json(const Permutation& p);
Json to_json(const StirlingRow& r);
Json to_json(const PermutationPsi& p);
Json to_json(const IntPoly& p);
Json to_json(const WhitneyCheck& w);
Json to_json(const AdmissibilityRow& r);
Json to_json(const MovableSearch& s);
Json to_json(const PeoCheck& c);

}  // namespace isf
