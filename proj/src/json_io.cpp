#include "dp4/json_io.hpp"

#include <stdexcept>

namespace dp4 {
namespace {

std::string status_str(LiftStatus s) {
  switch (s) {
    case LiftStatus::Empty:
      return "empty";
    case LiftStatus::PointFound:
      return "point-found";
    case LiftStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

Json half_json(HalfInt h) { return half_str(h); }

Json integer_json(const Integer& x) { return x.get_str(); }

Json quad_place_json(const QuadPlace& w) {
  Json j;
  j["field"] = ("Q(sqrt(" + w.m.get_str()) + "))";
  j["place"] = w.str();
  return j;
}

}  // namespace

Json rational_json(const Rational& x) { return to_string(x); }

Json poly_json(const UniPoly& f) {
  Json arr = Json::array();
  for (const Rational& c : f.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

Json form_json(const QuadraticForm& q) {
  Json rows = Json::array();
  for (int i = 0; i < q.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < q.n; ++j) row.push_back(rational_json(q.gram[i][j]));
    rows.push_back(row);
  }
  return Json{{"n", q.n}, {"gram", rows}};
}

Json place_json(const Place& v) { return v.str(); }

Json pencil_json(const QuadricPencil& p) {
  Json j;
  j["Q0"] = form_json(p.q0);
  j["Qinf"] = form_json(p.qinf);
  j["phi"] = poly_json(p.phi);
  j["squarefree"] = p.squarefree;
  Json factors = Json::array();
  for (const SingularFactor& f : p.factors) {
    Json fj;
    fj["at_infinity"] = f.at_infinity;
    if (!f.at_infinity) fj["poly"] = poly_json(f.poly);
    fj["degree"] = f.degree;
    fj["multiplicity"] = f.multiplicity;
    if (p.squarefree) fj["disc_class"] = poly_json(f.disc_class);
    factors.push_back(fj);
  }
  j["factors"] = factors;
  return j;
}

Json local_point_json(const LocalPointResult& r) {
  Json j;
  j["status"] = status_str(r.status);
  j["p"] = integer_json(r.p);
  j["level"] = r.level;
  if (r.status == LiftStatus::PointFound) {
    Json w = Json::array();
    for (const Integer& x : r.witness) w.push_back(integer_json(x));
    j["witness"] = w;
    j["minor_valuation"] = r.minor_valuation;
  }
  return j;
}

Json condition_ii_json(const ConditionIIReport& r) {
  Json primes = Json::array();
  for (const ConditionIIPrime& p : r.primes) {
    primes.push_back(Json{{"v", integer_json(p.v)}, {"holds", p.holds}, {"method", p.method}});
  }
  return Json{{"all_hold", r.all_hold}, {"primes", primes}};
}

Json evaluation_json(const EvaluationReport& r) {
  Json obs = Json::array();
  for (HalfInt h : r.observed) obs.push_back(half_json(h));
  return Json{{"place", place_json(r.place)},
              {"observed", obs},
              {"samples", r.samples},
              {"height_bound", r.height_bound},
              {"constant", r.constant}};
}

Json certify_json(const CertifyResult& r) {
  Json j;
  j["d"] = integer_json(r.d);
  j["obstruction"] = r.ok();
  if (r.certificate) {
    const ObstructionCertificate& c = *r.certificate;
    Json bad = Json::array();
    for (const Place& v : c.bad_set) bad.push_back(place_json(v));
    Json per = Json::array();
    for (const PlaceJustification& pj : c.per_place) {
      per.push_back(Json{{"place", place_json(pj.place)},
                         {"value", half_json(pj.value)},
                         {"justification", justification_str(pj.tag)},
                         {"note", pj.note}});
    }
    j["bad_set"] = bad;
    j["per_place"] = per;
    j["elsewhere"] = c.elsewhere_note;
    j["condition_ii"] = condition_ii_json(c.condition_ii);
    j["place3_subcert"] = Json{{"root_count", c.place3.root_count},
                               {"root_valuation", c.place3.root_valuation},
                               {"hilbert_2_m3", c.place3.hilbert_2_m3},
                               {"d_mod_3", integer_json(c.place3.d_mod_3)}};
    j["total"] = half_json(c.total);
  }
  if (r.failure) {
    j["failure"] = Json{{"step", r.failure->step}, {"detail", r.failure->detail}};
  }
  return j;
}

Json no_degree2_json(const NoDegree2Report& r) {
  Json evals = Json::array();
  for (const EvaluationReport& e : r.evaluations) evals.push_back(evaluation_json(e));
  return Json{{"certificate", certify_json(r.certificate)},
              {"local_emptiness", local_point_json(r.local_emptiness)},
              {"evaluations", evals},
              {"verdict", r.verdict},
              {"index_assumption", r.index_assumption}};
}

Json pencil_match_json(const PencilMatchReport& r) {
  return Json{{"radical_match", r.radical_match},
              {"disc2_match", r.disc2_match},
              {"disc3_match", r.disc3_match},
              {"ok", r.ok()},
              {"detail", r.detail}};
}

Json candidate_json(const CandidateReport& r) {
  Json j;
  j["index"] = r.index;
  j["f2"] = poly_json(r.f2);
  j["f3"] = poly_json(r.f3);
  j["eps3"] = poly_json(r.eps3);
  j["d"] = integer_json(r.d);
  j["status"] = r.status;
  j["has_rational_line"] = r.has_rational_line;
  if (r.line_t) {
    j["line_t"] = Json::array({integer_json(r.line_t->first), integer_json(r.line_t->second)});
  }
  Json evals = Json::array();
  for (const EvaluationReport& e : r.evaluations) evals.push_back(evaluation_json(e));
  j["evaluations"] = evals;
  j["all_constant"] = r.all_constant;
  j["half_count"] = r.half_count;
  j["flagged"] = r.flagged;
  return j;
}

Json smooth_points_json(const SmoothPointReport& r) {
  Json rows = Json::array();
  for (const QuadPlaceRow& row : r.rows) {
    Json rj = quad_place_json(row.place);
    rj["d_is_square"] = row.d_is_square;
    rj["symbol"] = row.symbol;
    rj["has_smooth_points"] = !row.fails;
    rj["justification"] = row.justification;
    rows.push_back(rj);
  }
  Json fails = Json::array();
  for (const QuadPlace& w : r.failures) fails.push_back(quad_place_json(w));
  return Json{{"d", integer_json(r.d)},
              {"m", integer_json(r.m)},
              {"places", rows},
              {"failures", fails},
              {"odd_product", r.odd_product},
              {"even_symbol", r.even_symbol}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected string or integer");
  return rational_from_string(j.get<std::string>());
}

UniPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected array");
  std::vector<Rational> coeffs;
  for (const Json& c : j) coeffs.push_back(rational_from_json(c));
  if (coeffs.empty()) coeffs.push_back(Rational(0));
  return UniPoly(coeffs);
}

QuadraticForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) {
    throw std::invalid_argument("form_from_json: expected an object with a \"gram\" matrix");
  }
  Mat gram;
  for (const Json& row : j.at("gram")) {
    std::vector<Rational> r;
    for (const Json& c : row) r.push_back(rational_from_json(c));
    gram.push_back(std::move(r));
  }
  return make_form(std::move(gram));
}

SearchConfig search_config_from_json(const Json& j) {
  SearchConfig cfg;
  if (!j.is_object()) throw std::invalid_argument("search config: expected object");
  if (j.contains("f2_list")) {
    cfg.f2_list.clear();
    for (const Json& f : j.at("f2_list")) cfg.f2_list.push_back(poly_from_json(f));
  }
  if (j.contains("f3_list")) {
    cfg.f3_list.clear();
    for (const Json& f : j.at("f3_list")) cfg.f3_list.push_back(poly_from_json(f));
  }
  if (j.contains("d_min")) cfg.d_min = j.at("d_min").get<long>();
  if (j.contains("d_max")) cfg.d_max = j.at("d_max").get<long>();
  if (j.contains("eps_generators")) {
    for (const Json& f : j.at("eps_generators")) cfg.eps_generators.push_back(poly_from_json(f));
  }
  if (j.contains("S")) {
    for (const Json& p : j.at("S")) {
      cfg.s_primes.push_back(Integer(rational_from_json(p).get_num()));
    }
  }
  if (j.contains("height_bound")) cfg.height_bound = j.at("height_bound").get<long>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned long>();
  return cfg;
}

}  // namespace dp4
