#include "csl/json_codec.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

#include "csl/error.hpp"

namespace csl {

namespace {

using nlohmann::json;

json encode(const Dist& d) {
  json array = json::array();
  for (const auto& [atom, weight] : d.entries()) {
    json entry = json::object();
    entry["atom"] = atom.name();
    entry["weight"] = weight.str();
    array.push_back(std::move(entry));
  }
  return array;
}

json encode_list(const std::vector<Dist>& dists) {
  json array = json::array();
  for (const auto& d : dists) array.push_back(encode(d));
  return array;
}

Dist decode_dist(const json& value) {
  if (!value.is_array()) throw DecodeError("a distribution must be a JSON array");
  std::vector<std::pair<Atom, Rational>> pairs;
  for (const auto& entry : value) {
    if (!entry.is_object() || !entry.contains("atom") || !entry.contains("weight")) {
      throw DecodeError("distribution entries must be objects with \"atom\" and \"weight\"");
    }
    const auto& atom = entry.at("atom");
    const auto& weight = entry.at("weight");
    if (!atom.is_string()) throw DecodeError("\"atom\" must be a string");
    if (!weight.is_string()) throw DecodeError("\"weight\" must be a fraction string");
    const auto& weight_text = weight.get_ref<const std::string&>();
    auto parsed = Rational::parse(weight_text);
    if (!parsed) throw DecodeError("invalid weight '" + weight_text + "'");
    try {
      pairs.emplace_back(Atom(atom.get<std::string>()), std::move(*parsed));
    } catch (const InvalidAtom& e) {
      throw DecodeError(e.what());
    }
  }
  return Dist::make(std::move(pairs));
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DecodeError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Dist> decode_list(const json& doc) {
  if (!doc.is_object()) throw DecodeError("expected an object with \"generators\" or \"base\"");
  const bool has_gens = doc.contains("generators");
  const bool has_base = doc.contains("base");
  if (has_gens == has_base) {
    throw DecodeError("expected exactly one of \"generators\" or \"base\"");
  }
  const json& list = doc.at(has_gens ? "generators" : "base");
  if (!list.is_array()) throw DecodeError("the generator list must be a JSON array");
  if (list.empty()) throw DecodeError("the generator list must not be empty");
  std::vector<Dist> dists;
  for (const auto& d : list) dists.push_back(decode_dist(d));
  return dists;
}

}  // namespace

std::string dist_to_json(const Dist& d) { return encode(d).dump(); }

std::string convex_set_to_json(const ConvexSet& s) {
  json doc = json::object();
  doc["base"] = encode_list(s.base());
  return doc.dump();
}

std::string generator_set_to_json(const GeneratorSet& g) {
  json doc = json::object();
  doc["generators"] = encode_list(g.generators());
  return doc.dump();
}

Dist dist_from_json(std::string_view text) { return decode_dist(parse_document(text)); }

GeneratorSet generator_set_from_json(std::string_view text) {
  return GeneratorSet(decode_list(parse_document(text)));
}

ConvexSet convex_set_from_json(std::string_view text) {
  return unique_base(generator_set_from_json(text));
}

}  // namespace csl
