#include "areawalk/serialize.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace areawalk {

namespace {

using json = nlohmann::ordered_json;

json coeffs_object(const AreaPolynomial& p) {
  json obj = json::object();
  for (const auto& [t, c] : p.terms()) obj[std::to_string(t)] = c.get_str();
  return obj;
}

AreaPolynomial coeffs_from(const json& obj) {
  if (!obj.is_object()) throw std::invalid_argument("coeffs must be a JSON object");
  AreaPolynomial::Terms terms;
  for (const auto& [key, value] : obj.items()) {
    std::size_t used = 0;
    const std::int64_t t = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key '" + key + "'");
    BigInt c;
    if (value.is_string()) {
      if (c.set_str(value.get<std::string>(), 10) != 0) throw std::invalid_argument("bad count for t=" + key);
    } else if (value.is_number_integer()) {
      c = static_cast<long>(value.get<std::int64_t>());
    } else {
      throw std::invalid_argument("count for t=" + key + " must be a decimal string");
    }
    terms.emplace(t, c);
  }
  return AreaPolynomial(std::move(terms));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string polynomial_to_json(const AreaPolynomial& p) {
  json doc;
  doc["coeffs"] = coeffs_object(p);
  return doc.dump();
}

AreaPolynomial polynomial_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.contains("coeffs")) throw std::invalid_argument("polynomial JSON lacks \"coeffs\"");
  return coeffs_from(doc.at("coeffs"));
}

std::string histogram_to_json(const EndpointHistogram& h) {
  json doc;
  doc["length"] = h.length();
  json endpoints = json::array();
  for (const auto& [e, p] : h.by_endpoint()) {
    json item;
    item["k"] = e.k;
    item["l"] = e.l;
    item["coeffs"] = coeffs_object(p);
    endpoints.push_back(std::move(item));
  }
  doc["endpoints"] = std::move(endpoints);
  return doc.dump();
}

EndpointHistogram histogram_from_json(std::string_view text) {
  const json doc = parse(text);
  try {
    EndpointHistogram::Map map;
    for (const auto& item : doc.at("endpoints")) {
      AreaPolynomial p = coeffs_from(item.at("coeffs"));
      if (!p.empty()) map.emplace(Endpoint{item.at("k").get<int>(), item.at("l").get<int>()}, std::move(p));
    }
    return EndpointHistogram(doc.at("length").get<int>(), std::move(map));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed histogram JSON: ") + e.what());
  }
}

void write_histogram_csv(std::ostream& os, const EndpointHistogram& h) {
  os << "length,k,l,t,count\n";
  for (const auto& [e, p] : h.by_endpoint()) {
    for (const auto& [t, c] : p.terms()) {
      os << h.length() << ',' << e.k << ',' << e.l << ',' << t << ',' << c.get_str() << '\n';
    }
  }
}

std::string representation_to_json(const TorusRepresentation& rep) {
  const RelationResiduals r = relation_residuals(rep);
  auto casimir_name = [](Casimir k) { return k == Casimir::zero ? "0" : "pi/q"; };
  json doc;
  doc["dim"] = rep.dim();
  doc["p"] = rep.p;
  doc["q"] = rep.q;
  doc["s"] = rep.s();
  doc["casimir_x"] = casimir_name(rep.casimir_x);
  doc["casimir_y"] = casimir_name(rep.casimir_y);
  doc["pivot"] = rep.pivot;
  doc["root_q"] = {{"re", rep.root_q.real()}, {"im", rep.root_q.imag()}};
  doc["residuals"] = {{"commutation", r.commutation},   {"u_reflection", r.u_reflection},
                      {"v_reflection", r.v_reflection}, {"sigma_square", r.sigma_square},
                      {"u_casimir", r.u_casimir},       {"v_casimir", r.v_casimir},
                      {"trace_conditions", r.trace_conditions}};
  return doc.dump();
}

}  // namespace areawalk
