// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#pragma once

#include <string>

#include "nashcone/criterion.hpp"

namespace nashcone {

/// Parses the JSON resolution format:
///   {
///     "components": ["S1", "S2"],
///     "curves": [
///       {"name": "C", "intersections": [-1, -1]},
///       {"name": "F1", "component": "S1", "intersections": [-2, 1]}
///     ]
///   }
/// Intersection numbers must be exact integer literals; floats are
/// rejected. Throws ParseError (with line information) on malformed JSON
/// and ValidationError on schema violations, naming the offenders.
ResolutionData parse_resolution_json(const std::string& text);

/// Serializes data back to the same format, stable across runs.
std::string resolution_to_json(const ResolutionData& data);

}  // namespace nashcone
