#pragma once

// JSON serialization of the library's report types and parsing of search
// configurations, used by the command-line tool.

#include <string>

#include "json.hpp"

#include "dp4/brauer.hpp"
#include "dp4/flynn.hpp"
#include "dp4/quadfield.hpp"

namespace dp4 {

using Json = nlohmann::json;

Json rational_json(const Rational& x);  // "num/den" (or "num" when den = 1)
Json poly_json(const UniPoly& f);       // coefficient array, lowest degree first
Json form_json(const QuadraticForm& q);
Json place_json(const Place& v);
Json pencil_json(const QuadricPencil& p);
Json local_point_json(const LocalPointResult& r);
Json condition_ii_json(const ConditionIIReport& r);
Json evaluation_json(const EvaluationReport& r);
Json certify_json(const CertifyResult& r);
Json no_degree2_json(const NoDegree2Report& r);
Json pencil_match_json(const PencilMatchReport& r);
Json candidate_json(const CandidateReport& r);
Json smooth_points_json(const SmoothPointReport& r);

Rational rational_from_json(const Json& j);
UniPoly poly_from_json(const Json& j);
QuadraticForm form_from_json(const Json& j);
SearchConfig search_config_from_json(const Json& j);

}  // namespace dp4
