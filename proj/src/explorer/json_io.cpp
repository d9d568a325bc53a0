#include "walkspec/explorer/json_io.hpp"

#include <chrono>
#include <ctime>

namespace walkspec::json_io {

Json rational(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from(const Json& j) {
  Rational q(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

Json optional_rational(const std::optional<Rational>& q) { return q ? rational(*q) : Json(nullptr); }

std::optional<Rational> optional_rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from(j);
}

Json optional_double(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::optional<double> optional_double_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

Json interval(const CertifiedInterval& iv) {
  return Json{{"lo", iv.lo}, {"hi", iv.hi}, {"converged", iv.converged}, {"iterations", iv.iterations}};
}

CertifiedInterval interval_from(const Json& j) {
  CertifiedInterval iv;
  iv.lo = j.at("lo").get<double>();
  iv.hi = j.at("hi").get<double>();
  iv.converged = j.at("converged").get<bool>();
  iv.iterations = j.at("iterations").get<int>();
  return iv;
}

Json bound(const BoundReport& rep) {
  Json j;
  j["id"] = std::string(to_string(rep.id));
  j["label"] = rep.label;
  j["side"] = std::string(to_string(rep.side));
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["exact"] = optional_rational(rep.exact);
  j["value"] = optional_double(rep.value);
  j["compared"] = optional_rational(rep.compared);
  j["verdict"] = std::string(to_string(rep.verdict));
  j["slack"] = optional_double(rep.slack);
  j["note"] = rep.note;
  j["characterization"] = std::string(to_string(rep.characterization));
  j["explanation"] = rep.explanation;
  return j;
}

BoundReport bound_from(const Json& j) {
  BoundReport rep;
  rep.id = parse_bound_id(j.at("id").get<std::string>());
  rep.label = j.at("label").get<std::string>();
  rep.side = parse_side(j.at("side").get<std::string>());
  rep.q = j.at("q").get<int>();
  rep.r = j.at("r").get<int>();
  rep.p = j.at("p").get<int>();
  rep.k = j.at("k").get<int>();
  rep.exact = optional_rational_from(j.at("exact"));
  rep.value = optional_double_from(j.at("value"));
  rep.compared = optional_rational_from(j.at("compared"));
  rep.verdict = parse_verdict(j.at("verdict").get<std::string>());
  rep.slack = optional_double_from(j.at("slack"));
  rep.note = j.at("note").get<std::string>();
  rep.characterization = parse_characterization(j.at("characterization").get<std::string>());
  rep.explanation = j.at("explanation").get<std::string>();
  return rep;
}

Json sandwich(const Sandwich& s) {
  return Json{{"r", s.r},
              {"max_lower", optional_double(s.max_lower)},
              {"min_upper", optional_double(s.min_upper)},
              {"mu_r", interval(s.mu_r)},
              {"consistent", s.consistent}};
}

Sandwich sandwich_from(const Json& j) {
  Sandwich s;
  s.r = j.at("r").get<int>();
  s.max_lower = optional_double_from(j.at("max_lower"));
  s.min_upper = optional_double_from(j.at("min_upper"));
  s.mu_r = interval_from(j.at("mu_r"));
  s.consistent = j.at("consistent").get<bool>();
  return s;
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> optional_bool_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

}  // namespace

Json profile(const RegularityProfile& prof) {
  Json j;
  j["degrees"] = prof.degrees;
  Json avg = Json::array();
  for (const auto& a : prof.average_degrees) avg.push_back(rational(a));
  j["average_degrees"] = avg;
  j["min_average_degree"] = optional_rational(prof.min_average_degree);
  j["max_average_degree"] = optional_rational(prof.max_average_degree);
  j["is_regular"] = prof.is_regular;
  j["is_bipartite"] = prof.is_bipartite;
  j["bipartition"] = prof.bipartition;
  j["is_semiregular"] = prof.is_semiregular;
  j["is_pseudo_regular"] = optional_bool(prof.is_pseudo_regular);
  j["is_pseudo_semiregular"] = optional_bool(prof.is_pseudo_semiregular);
  j["is_complete_multipartite"] = prof.is_complete_multipartite;
  j["parts"] = prof.parts;
  j["is_connected"] = prof.is_connected;
  Json comps = Json::array();
  for (const auto& c : prof.components) {
    comps.push_back(Json{{"vertices", c.vertices},
                         {"bipartite", c.bipartite},
                         {"regular", c.regular},
                         {"semiregular", c.semiregular},
                         {"pseudo_regular", optional_bool(c.pseudo_regular)},
                         {"pseudo_semiregular", optional_bool(c.pseudo_semiregular)},
                         {"mu", interval(c.mu)}});
  }
  j["components"] = comps;
  return j;
}

RegularityProfile profile_from(const Json& j) {
  RegularityProfile prof;
  prof.degrees = j.at("degrees").get<std::vector<int>>();
  for (const auto& a : j.at("average_degrees")) prof.average_degrees.push_back(rational_from(a));
  prof.min_average_degree = optional_rational_from(j.at("min_average_degree"));
  prof.max_average_degree = optional_rational_from(j.at("max_average_degree"));
  prof.is_regular = j.at("is_regular").get<bool>();
  prof.is_bipartite = j.at("is_bipartite").get<bool>();
  prof.bipartition = j.at("bipartition").get<std::vector<int>>();
  prof.is_semiregular = j.at("is_semiregular").get<bool>();
  prof.is_pseudo_regular = optional_bool_from(j.at("is_pseudo_regular"));
  prof.is_pseudo_semiregular = optional_bool_from(j.at("is_pseudo_semiregular"));
  prof.is_complete_multipartite = j.at("is_complete_multipartite").get<bool>();
  prof.parts = j.at("parts").get<std::vector<std::vector<int>>>();
  prof.is_connected = j.at("is_connected").get<bool>();
  for (const auto& c : j.at("components")) {
    ComponentFlags flags;
    flags.vertices = c.at("vertices").get<std::vector<int>>();
    flags.bipartite = c.at("bipartite").get<bool>();
    flags.regular = c.at("regular").get<bool>();
    flags.semiregular = c.at("semiregular").get<bool>();
    flags.pseudo_regular = optional_bool_from(c.at("pseudo_regular"));
    flags.pseudo_semiregular = optional_bool_from(c.at("pseudo_semiregular"));
    flags.mu = interval_from(c.at("mu"));
    prof.components.push_back(std::move(flags));
  }
  return prof;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace walkspec::json_io
