#pragma once

#include <string>

#include "realizer/io.hpp"
#include "realizer/pseudomanifold.hpp"

namespace realizer::testing {

inline std::string corpus_path(const std::string& name) { return std::string(REALIZER_CORPUS_DIR) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(REALIZER_TEST_DATA_DIR) + "/" + name; }

inline ComplexInput load(const std::string& name) { return read_complex_file(corpus_path(name)); }

inline ColoredPseudomanifold prepared(const std::string& name) {
  auto in = load(name);
  return ColoredPseudomanifold::prepare(in.complex, in.coloring, in.orientation);
}

}  // namespace realizer::testing
