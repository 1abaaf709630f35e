#pragma once

#include <string>

#include <json.hpp>

#include "jja/classify.hpp"
#include "jja/galois.hpp"
#include "jja/products.hpp"

namespace jja {

using Json = nlohmann::ordered_json;

/// Interchange documents. Coefficients are exact strings ("4", "3/7"); for
/// symmetric-by-contract maps (bracket, cocycle, brace, multiplication) only
/// entries with i <= j are stored and symmetry is materialized on load.

Json algebra_to_json(const JJAlgebra& a);
JJAlgebra algebra_from_json(const Json& j, bool verify = true);

Json comm_assoc_to_json(const CommAssocAlgebra& b);
CommAssocAlgebra comm_assoc_from_json(const Json& j, bool verify = true);

Json datum_to_json(const ExtendingDatum& d);
ExtendingDatum datum_from_json(const Json& j, bool verify_algebra = true);

Json matched_pair_to_json(const MatchedPair& mp);
MatchedPair matched_pair_from_json(const Json& j, bool verify_algebras = true);

Json crossed_to_json(const CrossedSystem& cs);
CrossedSystem crossed_from_json(const Json& j, bool verify_algebras = true);

Json skew_to_json(const SkewCrossedSystem& scs);
SkewCrossedSystem skew_from_json(const Json& j, bool verify_algebra = true);

Json supersolvable_to_json(const JJAlgebra& a, const SupersolvableDatum& sd);
std::pair<JJAlgebra, SupersolvableDatum> supersolvable_from_json(const Json& j,
                                                                 bool verify_algebra = true);

Json flag_to_json(const FlagDatum& fd);
FlagDatum flag_from_json(const Json& j, bool verify_algebra = true);

Json action_to_json(const GroupAction& action);
GroupAction action_from_json(const Json& j, bool verify_algebra = true,
                             const Budget& budget = {});

Json galois_pair_to_json(const MatchedPair& mp, const GaloisPair& gp);
std::pair<MatchedPair, GaloisPair> galois_pair_from_json(const Json& j,
                                                         bool verify_algebras = true);

Json matrix_to_json(const LinearMap& m);
LinearMap matrix_from_json(const Json& j, const Field& f);

Json report_to_json(const Report& rep);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

/// Reinterpret a document loaded over one field in another: identical fields
/// pass through, rational documents with integral entries reduce mod p.
JJAlgebra algebra_to_field(const JJAlgebra& a, const Field& target);

}  // namespace jja
