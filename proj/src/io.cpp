#include "realizer/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "realizer/errors.hpp"

namespace realizer {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + name + "\": " + e.what());
  }
}

}  // namespace

ComplexInput complex_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("complex must be a JSON object");
  const int n = field<int>(j, "n");
  const int nv = field<int>(j, "num_vertices");
  auto simplices = field<std::vector<std::vector<int>>>(j, "simplices");
  if (n < 1 || n > 8) throw ParseError("n must lie in [1, 8]");

  std::optional<Orientation> orientation;
  if (j.contains("orientation")) {
    auto o = field<std::vector<int>>(j, "orientation");
    if (o.size() != simplices.size()) throw ParseError("orientation needs one sign per simplex");
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (o[i] != 1 && o[i] != -1) throw ParseError("orientation signs must be +1 or -1");
      o[i] *= sort_sign(simplices[i]);
    }
    orientation = std::move(o);
  }
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::vector<std::size_t> order(simplices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return simplices[a] < simplices[b]; });
  std::vector<Simplex> sorted;
  Orientation sorted_orientation;
  for (std::size_t i : order) {
    sorted.push_back(simplices[i]);
    if (orientation) sorted_orientation.push_back((*orientation)[i]);
  }

  ComplexInput in{AbstractComplex(n, nv, std::move(sorted)), std::nullopt, std::nullopt};
  if (orientation) in.orientation = std::move(sorted_orientation);
  if (j.contains("colors")) {
    auto colors = field<std::vector<int>>(j, "colors");
    if (colors.size() != static_cast<std::size_t>(nv)) throw ParseError("colors needs one entry per vertex");
    for (int& c : colors) {
      if (c < 1 || c > n + 1) throw ParseError("colors must lie in [1, n+1]");
      --c;
    }
    in.coloring = std::move(colors);
  }
  return in;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    // e.what() carries "at line L, column C".
    throw ParseError(path + ": " + e.what());
  }
}

ComplexInput read_complex_file(const std::string& path) {
  try {
    return complex_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    throw ParseError(msg.rfind(path, 0) == 0 ? msg : path + ": " + msg);
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << j.dump(2) << '\n';
}

json complex_to_json(const AbstractComplex& c, const Coloring* coloring, const Orientation* orientation) {
  json j;
  j["n"] = c.dim();
  j["num_vertices"] = c.num_vertices();
  j["simplices"] = c.top();
  if (coloring) {
    std::vector<int> colors(coloring->begin(), coloring->end());
    for (int& x : colors) ++x;
    j["colors"] = colors;
  }
  if (orientation) j["orientation"] = *orientation;
  return j;
}

json cell_complex_to_json(const PermutahedralComplex& pc) {
  json j;
  j["n"] = pc.dim();
  std::vector<int> cells(pc.num_cells());
  std::iota(cells.begin(), cells.end(), 0);
  j["cells"] = cells;
  json glue = json::array();
  for (std::size_t a = 0; a < pc.num_cells(); ++a)
    for (std::size_t s = 0; s < pc.num_subsets(); ++s) {
      const int b = pc.neighbor(static_cast<int>(a), static_cast<int>(s));
      if (b > static_cast<int>(a)) glue.push_back({a, to_string(pc.polytope().subsets()[s]), b});
    }
  j["glue"] = std::move(glue);
  return j;
}

json cover_to_json(const CoverComplex& cover) {
  json j = cell_complex_to_json(cover.pc);
  json cells = json::array();
  for (const auto& v : cover.cells) cells.push_back({{"sigma", v.sigma}, {"tuple_id", v.tuple}, {"g", v.g.bits}});
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace realizer
