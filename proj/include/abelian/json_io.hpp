#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "abelian/amalgam.hpp"
#include "abelian/decide.hpp"
#include "abelian/parse.hpp"

namespace abelian {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

inline Json element_to_json(const GroupElement& x) { return Json(x.coords); }

inline GroupElement element_from_json(const Json& j, const FinAbGroup& group,
                                      const std::string& field) {
  if (!j.is_array())
    throw std::invalid_argument("field '" + field + "' must be a coordinate array");
  std::vector<std::int64_t> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw std::invalid_argument("field '" + field + "' must contain integers");
    coords.push_back(c.get<std::int64_t>());
  }
  if (coords.size() != group.rank())
    throw std::invalid_argument("field '" + field + "' has " + std::to_string(coords.size()) +
                                " coordinates, expected " + std::to_string(group.rank()));
  return group.element(std::move(coords));
}

// Span schema:
//   { "source": {"group": "Z/2", "g": [1]},
//     "left":   {"codomain": "Z/4", "k": [2], "images": [[2]]},
//     "right":  {"codomain": "Z/2", "l": [1], "images": [[1]]} }
inline Json span_to_json(const Span& span) {
  Json j;
  j["source"] = {{"group", to_literal(span.source.group)},
                 {"g", element_to_json(span.source.point)}};
  Json left;
  left["codomain"] = to_literal(span.left_target.group);
  left["k"] = element_to_json(span.left_target.point);
  Json left_images = Json::array();
  for (const auto& im : span.left.images()) left_images.push_back(element_to_json(im));
  left["images"] = std::move(left_images);
  j["left"] = std::move(left);

  Json right;
  right["codomain"] = to_literal(span.right_target.group);
  right["l"] = element_to_json(span.right_target.point);
  Json right_images = Json::array();
  for (const auto& im : span.right.images()) right_images.push_back(element_to_json(im));
  right["images"] = std::move(right_images);
  j["right"] = std::move(right);
  return j;
}

namespace detail {

inline const Json& require_field(const Json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument("missing field '" + name + "'");
  return *it;
}

inline FinAbGroup group_from_field(const Json& j, const std::string& name) {
  const Json& f = require_field(j, name);
  if (!f.is_string())
    throw std::invalid_argument("field '" + name + "' must be a group literal string");
  return parse_group(f.get<std::string>());
}

inline std::vector<GroupElement> images_from_field(const Json& leg, const FinAbGroup& codomain,
                                                   std::size_t expected,
                                                   const std::string& field) {
  const Json& arr = require_field(leg, "images");
  if (!arr.is_array())
    throw std::invalid_argument("field '" + field + ".images' must be an array");
  if (arr.size() != expected)
    throw std::invalid_argument("field '" + field + ".images' has " +
                                std::to_string(arr.size()) + " entries, expected " +
                                std::to_string(expected));
  std::vector<GroupElement> images;
  for (const auto& im : arr)
    images.push_back(element_from_json(im, codomain, field + ".images[i]"));
  return images;
}

}  // namespace detail

inline Span span_from_json(const Json& j) {
  const Json& src = detail::require_field(j, "source");
  FinAbGroup source_group = detail::group_from_field(src, "group");
  PointedGroup source(source_group,
                      element_from_json(detail::require_field(src, "g"), source_group, "source.g"));

  const Json& left = detail::require_field(j, "left");
  FinAbGroup k_group = detail::group_from_field(left, "codomain");
  PointedGroup left_target(
      k_group, element_from_json(detail::require_field(left, "k"), k_group, "left.k"));
  Homomorphism f(source_group, k_group,
                 detail::images_from_field(left, k_group, source_group.rank(), "left"));

  const Json& right = detail::require_field(j, "right");
  FinAbGroup l_group = detail::group_from_field(right, "codomain");
  PointedGroup right_target(
      l_group, element_from_json(detail::require_field(right, "l"), l_group, "right.l"));
  Homomorphism h(source_group, l_group,
                 detail::images_from_field(right, l_group, source_group.rank(), "right"));

  return Span(std::move(source), std::move(f), std::move(left_target), std::move(h),
              std::move(right_target));
}

// AmalgamResult schema:
//   { "amalgamable": ..., "D": {"invariant_factors": [...]}, "d": [...],
//     "left_images": [...], "right_images": [...], "witness"?: {...} }
inline Json amalgam_result_to_json(const AmalgamResult& r) {
  Json j;
  j["amalgamable"] = r.amalgamable;
  j["D"] = Json{{"invariant_factors", r.quotient.moduli()}};
  j["d"] = element_to_json(r.d);
  Json left = Json::array();
  for (const auto& im : r.left_map.images()) left.push_back(element_to_json(im));
  j["left_images"] = std::move(left);
  Json right = Json::array();
  for (const auto& im : r.right_map.images()) right.push_back(element_to_json(im));
  j["right_images"] = std::move(right);
  if (r.witness) {
    j["witness"] = Json{{"element", element_to_json(r.witness->element)},
                        {"in_kernel_of", r.witness->in_left_kernel ? "left" : "right"}};
  }
  return j;
}

inline Json subgroup_to_json(const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  Json gens = Json::array();
  for (const auto& g : s.generators()) gens.push_back(element_to_json(g));
  j["generators"] = std::move(gens);
  Json elems = Json::array();
  for (const auto& e : s.elements()) elems.push_back(element_to_json(e));
  j["elements"] = std::move(elems);
  return j;
}

inline std::string structural_failure_name(StructuralFailure f) {
  switch (f) {
    case StructuralFailure::order_not_prime_power:
      return "order-not-prime-power";
    case StructuralFailure::primary_component_not_cyclic:
      return "p-component-not-cyclic";
  }
  return "unknown";
}

// Verdict as emitted by check-base and the enumeration table rows.
inline Json verdict_to_json(const BaseVerdict& v) {
  Json j;
  j["is_base"] = v.is_base;
  if (v.is_base && v.prime_power) {
    j["p"] = v.prime_power->first;
    j["n"] = v.prime_power->second;
  }
  if (!v.is_base && v.refuting_pair) {
    const auto& [h, k] = *v.refuting_pair;
    Json witness;
    Json h_gens = Json::array();
    for (const auto& g : h.generators()) h_gens.push_back(element_to_json(g));
    Json k_gens = Json::array();
    for (const auto& g : k.generators()) k_gens.push_back(element_to_json(g));
    witness["H"] = Json{{"generators", std::move(h_gens)}, {"order", h.order()}};
    witness["K"] = Json{{"generators", std::move(k_gens)}, {"order", k.order()}};
    j["witness"] = std::move(witness);
  }
  if (!v.is_base && v.structural_failure)
    j["reason"] = structural_failure_name(*v.structural_failure);
  return j;
}

inline Json row_to_json(const BaseRow& row) {
  Json j;
  j["group"] = to_literal(row.group);
  j["g"] = element_to_json(row.g);
  Json verdict = verdict_to_json(row.verdict);
  for (auto& [key, value] : verdict.items()) j[key] = std::move(value);
  return j;
}

}  // namespace abelian
