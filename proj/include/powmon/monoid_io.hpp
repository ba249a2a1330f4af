#pragma once

// JSON monoid definition files.
//
//   {"label": "...", "signature": {"free_rank": d, "torsion_orders": [...]},
//    "family": "HALF_PLANE_LEX", ...family fields...}
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; elements are arrays of free coordinates followed by torsion
// residues; surds are {"p","q","r","n"}.

#include "powmon/monoid.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace powmon::io {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

inline Integer integer_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError(what + ": not an integer: \"" + s + "\"", 0);
    return Integer(s);
  }
  throw ParseError(what + ": expected an integer", 0);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"", 0);
  return j.at(key);
}

inline json element_to_json(const GroupElement& u) {
  json arr = json::array();
  for (const auto& c : u.coordinates()) arr.push_back(integer_to_json(c));
  return arr;
}

inline GroupElement element_from_json(const SignaturePtr& sig, const json& j) {
  if (!j.is_array()) throw ParseError("element: expected an array", 0);
  if (j.size() != sig->width())
    throw ParseError("element: expected " + std::to_string(sig->width()) + " coordinates", 0);
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(integer_from_json(c, "element"));
  return GroupElement::from_coordinates(sig, coords);
}

inline json elements_to_json(const std::vector<GroupElement>& v) {
  json arr = json::array();
  for (const auto& u : v) arr.push_back(element_to_json(u));
  return arr;
}

inline std::vector<GroupElement> elements_from_json(const SignaturePtr& sig, const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of elements", 0);
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(element_from_json(sig, e));
  return out;
}

inline json signature_to_json(const GroupSignature& sig) {
  json t = json::array();
  for (const auto& n : sig.torsion_orders) t.push_back(integer_to_json(n));
  return json{{"free_rank", sig.free_rank}, {"torsion_orders", t}};
}

inline SignaturePtr signature_from_json(const json& j) {
  const auto& rank = field(j, "free_rank", "signature");
  if (!rank.is_number_unsigned()) throw ParseError("signature: free_rank must be a non-negative integer", 0);
  std::vector<Integer> torsion;
  if (j.contains("torsion_orders"))
    for (const auto& t : j.at("torsion_orders")) torsion.push_back(integer_from_json(t, "torsion_orders"));
  return make_signature(rank.get<std::size_t>(), std::move(torsion));
}

inline json surd_to_json(const QuadraticSurd& a) {
  return json{{"p", integer_to_json(a.p)}, {"q", integer_to_json(a.q)}, {"r", integer_to_json(a.r)},
              {"n", integer_to_json(a.n)}};
}

inline QuadraticSurd surd_from_json(const json& j, bool allow_rational) {
  auto p = integer_from_json(field(j, "p", "alpha"), "alpha.p");
  auto q = integer_from_json(field(j, "q", "alpha"), "alpha.q");
  auto r = integer_from_json(field(j, "r", "alpha"), "alpha.r");
  auto n = integer_from_json(field(j, "n", "alpha"), "alpha.n");
  if (allow_rational && (q == 0 || is_perfect_square(n))) {
    if (r <= 0 || n <= 0) throw InvalidArgument("rational slope needs r > 0 and n > 0");
    return QuadraticSurd{p, q, r, n};
  }
  return QuadraticSurd::make(p, q, r, n);
}

inline std::pair<std::size_t, std::size_t> embedding_from_json(const json& j) {
  const auto& e = field(j, "embedding", j.value("family", std::string("monoid")));
  if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
    throw ParseError("embedding: expected two coordinate indices", 0);
  return {e[0].get<std::size_t>(), e[1].get<std::size_t>()};
}

inline json monoid_to_json(const MonoidSpec& m) {
  json j;
  j["label"] = m.label();
  j["signature"] = signature_to_json(*m.signature());
  j["family"] = m.family_name();
  if (const auto* f = m.as<family::Numerical>()) {
    json g = json::array();
    for (const auto& x : f->generators) g.push_back(integer_to_json(x));
    j["generators"] = g;
  } else if (const auto* f = m.as<family::HalfPlaneLex>()) {
    j["embedding"] = {f->x_index, f->y_index};
  } else if (const auto* f = m.as<family::IrrationalCone>()) {
    j["embedding"] = {f->x_index, f->y_index};
    j["alpha"] = surd_to_json(f->alpha);
    if (!f->alpha.is_irrational()) j["allow_rational"] = true;
  } else if (const auto* f = m.as<family::FreeGenerated>()) {
    j["generators"] = elements_to_json(f->generators);
  } else if (const auto* f = m.as<family::Composite>()) {
    j["valuation_part"] = monoid_to_json(*f->valuation_part);
    j["complement"] = {{"base_subgroup", elements_to_json(f->complement_part.base_subgroup)},
                       {"positive_generators", elements_to_json(f->complement_part.positive_generators)}};
  }
  return j;
}

inline MonoidPtr monoid_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("monoid: expected a JSON object", 0);
  const auto family = field(j, "family", "monoid").get<std::string>();
  const auto label = j.value("label", family);
  if (family == "FULL_N0") {
    if (j.contains("signature") && !(*signature_from_json(j.at("signature")) == GroupSignature{1, {}}))
      throw InvalidArgument("FULL_N0 lives in Z");
    return MonoidSpec::full_n0(label);
  }
  if (family == "NUMERICAL") {
    std::vector<Integer> gens;
    for (const auto& g : field(j, "generators", family)) gens.push_back(integer_from_json(g, "generators"));
    return MonoidSpec::numerical(std::move(gens), label);
  }
  auto sig = signature_from_json(field(j, "signature", family));
  if (family == "HALF_PLANE_LEX") {
    auto [x, y] = embedding_from_json(j);
    return MonoidSpec::half_plane_lex(sig, x, y, label);
  }
  if (family == "IRRATIONAL_CONE") {
    auto [x, y] = embedding_from_json(j);
    const bool allow = j.value("allow_rational", false);
    return MonoidSpec::irrational_cone(sig, x, y, surd_from_json(field(j, "alpha", family), allow), label, allow);
  }
  if (family == "FREE_GENERATED")
    return MonoidSpec::free_generated(sig, elements_from_json(sig, field(j, "generators", family)), label);
  if (family == "COMPOSITE") {
    auto v = monoid_from_json(field(j, "valuation_part", family));
    if (!(*v->signature() == *sig)) throw SignatureMismatch("COMPOSITE valuation part signature");
    const auto& c = field(j, "complement", family);
    ComplementSpec comp{elements_from_json(v->signature(), field(c, "base_subgroup", "complement")),
                        elements_from_json(v->signature(), field(c, "positive_generators", "complement"))};
    return MonoidSpec::composite(std::move(v), std::move(comp), label);
  }
  throw ParseError("unknown monoid family \"" + family + "\"", 0);
}

inline MonoidPtr parse_monoid(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("monoid file: ") + e.what(), e.byte);
  }
  try {
    return monoid_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("monoid file: ") + e.what(), 0);
  }
}

inline std::string serialize_monoid(const MonoidSpec& m) { return monoid_to_json(m).dump(2); }

inline MonoidPtr load_monoid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open monoid file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_monoid(ss.str());
}

}  // namespace powmon::io
