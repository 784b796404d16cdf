// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/resolution_io.hpp"

#include <limits>

#include <json.hpp>

namespace nashcone {

namespace {

using json = nlohmann::ordered_json;

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Int integer_at(const json& value, const std::string& where) {
  // nlohmann keeps exact integer lexemes as int64/uint64; anything that fell
  // into the float path (fractions, exponents, |n| >= 2^64) is rejected.
  if (value.is_number_integer())
    return Int(value.get<std::int64_t>());
  if (value.is_number_unsigned())
    return Int(value.get<std::uint64_t>());
  throw ValidationError(where + ": expected an exact integer, got " + value.dump());
}

}  // namespace

ResolutionData parse_resolution_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("resolution file: " + std::string(e.what()) + " (line " +
                     std::to_string(line_of_offset(text, e.byte)) + ")");
  }

  if (!doc.is_object())
    throw ValidationError("resolution file: top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "components" && key != "curves")
      throw ValidationError("resolution file: unknown key \"" + key + "\"");
  if (!doc.contains("components") || !doc["components"].is_array())
    throw ValidationError("resolution file: \"components\" must be an array of names");
  if (!doc.contains("curves") || !doc["curves"].is_array())
    throw ValidationError("resolution file: \"curves\" must be an array of objects");

  std::vector<std::string> components;
  for (const auto& c : doc["components"]) {
    if (!c.is_string())
      throw ValidationError("resolution file: component names must be strings");
    components.push_back(c.get<std::string>());
  }

  std::vector<CurveClass> curves;
  for (const auto& entry : doc["curves"]) {
    if (!entry.is_object())
      throw ValidationError("resolution file: each curve must be an object");
    for (const auto& [key, _] : entry.items())
      if (key != "name" && key != "component" && key != "intersections")
        throw ValidationError("resolution file: unknown curve key \"" + key + "\"");
    if (!entry.contains("name") || !entry["name"].is_string())
      throw ValidationError("resolution file: every curve needs a string \"name\"");
    CurveClass curve;
    curve.name = entry["name"].get<std::string>();
    if (entry.contains("component")) {
      if (!entry["component"].is_string())
        throw ValidationError("resolution file: curve " + curve.name +
                              ": \"component\" must be a string");
      curve.component = entry["component"].get<std::string>();
    }
    if (!entry.contains("intersections") || !entry["intersections"].is_array())
      throw ValidationError("resolution file: curve " + curve.name +
                            ": \"intersections\" must be an array of integers");
    for (const auto& v : entry["intersections"])
      curve.intersections.push_back(integer_at(v, "curve " + curve.name));
    curves.push_back(std::move(curve));
  }

  try {
    return ResolutionData(std::move(components), std::move(curves));
  } catch (const StructuralError& e) {
    throw ValidationError(e.what());
  }
}

std::string resolution_to_json(const ResolutionData& data) {
  json doc;
  doc["components"] = data.components();
  doc["curves"] = json::array();
  for (const auto& z : data.curves()) {
    json curve;
    curve["name"] = z.name;
    if (z.component) curve["component"] = *z.component;
    json numbers = json::array();
    for (const Int& v : z.intersections) {
      if (v < std::numeric_limits<std::int64_t>::min() ||
          v > std::numeric_limits<std::int64_t>::max())
        throw ValidationError("curve " + z.name +
                              ": intersection number does not fit the JSON format");
      numbers.push_back(v.convert_to<std::int64_t>());
    }
    curve["intersections"] = std::move(numbers);
    doc["curves"].push_back(std::move(curve));
  }
  return doc.dump(2) + "\n";
}

}  // namespace nashcone
