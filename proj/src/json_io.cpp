#include "sif/json_io.hpp"

#include <stdexcept>

namespace sif {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

json rational_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j) {
  require(j.is_string(), "rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

json cyc_json(const RootSystem& rs, const Cyc& c) {
  Cyc promoted = rs.cyc_one() * c;
  json out = json::array();
  for (const Rational& r : promoted.coords()) out.push_back(rational_json(r));
  return out;
}

Cyc cyc_from_json(const RootSystem& rs, const json& j) {
  require(j.is_array(), "cyclotomic scalar must be a coordinate array");
  int n = euler_phi(rs.cyc_order());
  require(static_cast<int>(j.size()) <= n, "too many cyclotomic coordinates");
  Cyc out = Cyc::zero(rs.cyc_order());
  for (size_t k = 0; k < j.size(); ++k)
    out += Cyc::root_of_unity(rs.cyc_order(), static_cast<long>(k)) * rational_from_json(j[k]);
  return out;
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (const Rational& c : w.c) out.push_back(rational_json(c));
  return out;
}

Weight weight_from_json(const RootSystem& rs, const json& j) {
  require(j.is_array() && static_cast<int>(j.size()) == rs.rank(),
          "weight must be an array of rank coordinates");
  Weight w(rs.rank());
  for (int k = 0; k < rs.rank(); ++k) w.c[k] = rational_from_json(j[k]);
  return w;
}

json state_json(const RootSystem& rs, const State& s) {
  json terms = json::array();
  for (const auto& [mon, coeff] : s.terms()) {
    json creators = json::array();
    for (const auto& [n, i] : mon->creators) creators.push_back(json::array({i, n}));
    terms.push_back(json{{"coeff", cyc_json(rs, coeff)},
                         {"creators", creators},
                         {"lattice", weight_json(mon->lattice)}});
  }
  return json{{"terms", terms}};
}

State state_from_json(const RootSystem& rs, const json& j) {
  require(j.is_object() && j.contains("terms") && j["terms"].is_array(),
          "state must be {\"terms\": [...]}");
  State out;
  for (const json& t : j["terms"]) {
    require(t.is_object() && t.contains("coeff") && t.contains("creators") &&
                t.contains("lattice"),
            "state term needs coeff, creators, lattice");
    FockMonomial mon;
    require(t["creators"].is_array(), "creators must be an array");
    for (const json& c : t["creators"]) {
      require(c.is_array() && c.size() == 2 && c[0].is_number_integer() &&
                  c[1].is_number_integer(),
              "creator must be [node, degree]");
      int i = c[0].get<int>(), n = c[1].get<int>();
      require(i >= 1 && i <= rs.rank(), "creator node out of range");
      require(n >= 1, "creator degree must be positive");
      mon.creators.emplace_back(n, i);
    }
    mon.sort_creators();
    mon.lattice = weight_from_json(rs, t["lattice"]);
    require(mon.lattice.is_integral(), "lattice vector must be integral");
    out.add_term(mon, cyc_from_json(rs, t["coeff"]));
  }
  return out;
}

json qcharacter_json(const QCharacter& ch) {
  json out = json::array();
  for (const auto& [q, wm] : ch.terms()) {
    json weights = json::array();
    for (const auto& [w, mult] : wm)
      weights.push_back(json{{"coords", weight_json(w)}, {"mult", mult}});
    out.push_back(json{{"q_degree", q}, {"weights", weights}});
  }
  return out;
}

json ring_element_json(const RootSystem& rs, const RingElement& el) {
  json reduced = json::array();
  for (const auto& [key, vec] : el.reduced) {
    json entries = json::array();
    for (const auto& [mon, coeff] : vec) {
      json creators = json::array();
      for (const auto& [n, i] : mon.creators) creators.push_back(json::array({i, n}));
      entries.push_back(json{{"coeff", cyc_json(rs, coeff)},
                             {"creators", creators},
                             {"lattice", weight_json(mon.lattice)}});
    }
    reduced.push_back(json{{"weight", weight_json(key.first)},
                           {"conformal_weight", rational_json(key.second)},
                           {"entries", entries}});
  }
  return json{{"lambda", weight_json(el.lambda)},
              {"cutoff", rational_json(el.cutoff)},
              {"rep", state_json(rs, el.rep)},
              {"reduced", reduced},
              {"fingerprint", el.fingerprint}};
}

json relation_series_json(const RelationSeries& ser) {
  json coeffs = json::array();
  for (const auto& [n, vec] : ser.coefficients) {
    json terms = json::array();
    for (const auto& [mon, c] : vec) {
      json g1 = json::array({json(mon.first.first), mon.first.second});
      json g2 = json::array({json(mon.second.first), mon.second.second});
      terms.push_back(
          json{{"monomial", json::array({g1, g2})}, {"coeff", rational_json(c)}});
    }
    coeffs.push_back(json{{"q", n}, {"terms", terms}});
  }
  return json{{"i", ser.i}, {"j", ser.j}, {"s", ser.s}, {"coefficients", coeffs}};
}

}  // namespace sif
