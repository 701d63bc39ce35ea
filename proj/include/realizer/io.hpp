#pragma once

// JSON file formats.
//
// Complex: {"n": int, "num_vertices": int, "simplices": [[int,...],...],
//           "colors": [int,...] (optional, 1-based), "orientation": [+1|-1,...] (optional)}
// Orientation signs refer to each simplex's vertex order as written.
//
// Cell complex: {"n": int, "cells": [...], "glue": [[cell, "{1,3}", other], ...]}
// where each cover cell is {"sigma": int, "tuple_id": int, "g": int}.

#include <optional>
#include <string>

#include <json.hpp>

#include "realizer/covering.hpp"
#include "realizer/pseudomanifold.hpp"
#include "realizer/tomei.hpp"

namespace realizer {

struct ComplexInput {
  AbstractComplex complex;
  std::optional<Coloring> coloring;        // 0-based
  std::optional<Orientation> orientation;  // relative to sorted vertex order
};

/// Simplices are sorted internally and the list lexicographically; orientation
/// signs follow their simplices. Throws ParseError or InvalidComplex.
ComplexInput complex_from_json(const nlohmann::json& j);
ComplexInput read_complex_file(const std::string& path);

nlohmann::json complex_to_json(const AbstractComplex& c, const Coloring* coloring = nullptr,
                               const Orientation* orientation = nullptr);

nlohmann::json cell_complex_to_json(const PermutahedralComplex& pc);
nlohmann::json cover_to_json(const CoverComplex& cover);

/// Throws ParseError with line information.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace realizer
