#include "realizer/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "realizer/errors.hpp"
#include "realizer/homology.hpp"
#include "realizer/realization.hpp"
#include "realizer/tomei.hpp"

namespace realizer {

using nlohmann::json;

namespace {

struct CheckFailed : Error {
  using Error::Error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckFailed(what);
}

// Ordered list of checks, each tagged with the statement it certifies.
class Checks {
 public:
  bool run(const std::string& name, const std::string& certifies, const std::function<std::string()>& body) {
    try {
      record(name, certifies, "pass", body());
      return true;
    } catch (const CapExceeded& e) {
      cap_exceeded_ = true;
      record(name, certifies, "cap_exceeded", e.what());
    } catch (const std::exception& e) {
      record(name, certifies, "fail", e.what());
    }
    return false;
  }
  void skip(const std::string& name, const std::string& certifies, const std::string& reason) {
    record(name, certifies, "skipped", reason);
  }
  void fail(const std::string& name, const std::string& certifies, const std::string& reason) {
    record(name, certifies, "fail", reason);
  }

  bool failed() const { return failed_; }
  std::string status() const { return failed_ ? "fail" : (cap_exceeded_ ? "cap_exceeded" : "pass"); }
  const json& items() const { return items_; }

 private:
  void record(const std::string& name, const std::string& certifies, const std::string& result,
              const std::string& detail) {
    if (result == "fail") failed_ = true;
    items_.push_back({{"name", name}, {"certifies", certifies}, {"result", result}, {"detail", detail}});
  }

  json items_ = json::array();
  bool failed_ = false;
  bool cap_exceeded_ = false;
};

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

json big_to_json(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(x);
  return x.str();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

// Every Phi is a fixed-point-free involution and nested ones commute.
void check_phi(CoverSpace& space, const CoverComplex& cover, std::size_t& involution_cases,
               std::size_t& commutation_cases) {
  const auto& subs = space.subsets();
  for (const auto& v : cover.cells) {
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const CoverCell w = space.phi(static_cast<int>(s), v);
      require(!(w == v), "Phi_" + to_string(subs[s]) + " has a fixed point");
      require(space.phi(static_cast<int>(s), w) == v, "Phi_" + to_string(subs[s]) + " is not an involution");
      require(space.in_V(w), "Phi_" + to_string(subs[s]) + " leaves V");
      ++involution_cases;
    }
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = 0; b < subs.size(); ++b) {
        if (!subs[a].proper_subset_of(subs[b])) continue;
        const CoverCell x = space.phi(static_cast<int>(a), space.phi(static_cast<int>(b), v));
        const CoverCell y = space.phi(static_cast<int>(b), space.phi(static_cast<int>(a), v));
        require(x == y, "Phi_" + to_string(subs[a]) + " and Phi_" + to_string(subs[b]) + " do not commute");
        ++commutation_cases;
      }
  }
}

}  // namespace

json verify_report(const ComplexInput& in, const RunConfig& cfg) {
  Checks ck;
  json rep;
  rep["input"] = {{"n", in.complex.dim()}, {"num_vertices", in.complex.num_vertices()},
                  {"simplices", in.complex.size()}};
  rep["component_cells"] = nullptr;
  rep["covering_degree"] = nullptr;
  rep["q_component"] = nullptr;
  rep["q_formula"] = nullptr;
  rep["per_simplex_counts_checksum"] = nullptr;

  auto finish = [&]() {
    rep["checks"] = ck.items();
    rep["status"] = ck.status();
    return rep;
  };

  const auto validation = validate_pseudomanifold(in.complex);
  if (!ck.run("pseudomanifold", "input is a closed strongly connected pseudomanifold", [&] {
        require(validation.valid(), validation.summary());
        return validation.summary();
      }))
    return finish();

  std::optional<ColoredPseudomanifold> zopt;
  const std::string orient_claim = "the pseudomanifold is oriented, so it carries a fundamental class";
  try {
    zopt.emplace(ColoredPseudomanifold::prepare(in.complex, in.coloring, in.orientation));
  } catch (const NonOrientable& e) {
    ck.fail("orientation", orient_claim, e.what());
    return finish();
  } catch (const OddCycle& e) {
    ck.fail("bipartition", "top simplices split into two parts across every facet", e.what());
    return finish();
  } catch (const Error& e) {
    ck.fail("orientation", orient_claim, e.what());
    return finish();
  }
  const ColoredPseudomanifold& z = *zopt;
  const int n = z.dim();
  rep["input"]["subdivided"] = z.subdivided();
  rep["input"]["colored_simplices"] = z.num_top();

  ck.run("coloring", "vertices are regularly colored in n+1 colors", [&] {
    require(check_regular_coloring(z.complex(), z.coloring()), "coloring is not regular");
    return z.subdivided() ? std::string("colored by face dimension of the barycentric subdivision")
                          : std::string("supplied coloring is regular");
  });
  ck.run("bipartition", "top simplices split into U+ and U- across every facet", [&] {
    const auto plus = std::count(z.parts().begin(), z.parts().end(), 1);
    const auto minus = static_cast<long>(z.num_top()) - plus;
    for (std::size_t s = 0; s < z.num_top(); ++s)
      for (const auto& nb : z.dual().neighbor[s]) require(z.parts()[nb.simplex] != z.parts()[s], "adjacent simplices share a part");
    require(plus == minus, "parts have different sizes");
    return "|U+| = |U-| = " + std::to_string(plus);
  });
  ck.run("orientation", orient_claim, [&] {
    require(is_coherent(z.complex(), z.orientation()), "orientation is not coherent");
    require(is_coherent(z.subdivision().complex, z.subdivision_orientation()), "induced orientation of Z' is not coherent");
    return std::string("coherent on Z and on Z'");
  });

  CoverSpace space(z);
  const auto& subs = space.subsets();
  ck.run("P_omega nonempty", "each set P_omega is nonempty", [&] {
    for (std::size_t s = 0; s < subs.size(); ++s)
      require(is_in_P_omega(z, space.component(space.canonical_tuple(), static_cast<int>(s)), subs[s]),
              "canonical involution not in P_" + to_string(subs[s]));
    return "canonical involution lies in P_omega for all " + std::to_string(subs.size()) + " subsets";
  });

  std::optional<BigInt> q_formula;
  std::vector<std::uint64_t> p_counts;
  if (z.num_top() <= cfg.matching_cap) {
    ck.run("P_omega counts", "q = 2^(n-1) prod |P_omega|", [&] {
      BigInt q = BigInt(1) << (n - 1);
      std::vector<std::string> parts;
      for (ColorSet s : subs) {
        p_counts.push_back(count_P_omega(z, s, cfg.matching_cap));
        q *= p_counts.back();
        parts.push_back("|P_" + to_string(s) + "| = " + std::to_string(p_counts.back()));
      }
      q_formula = q;
      return join(parts) + "; q = " + q.str();
    });
    if (q_formula) rep["q_formula"] = big_to_json(*q_formula);
  } else {
    ck.skip("P_omega counts", "q = 2^(n-1) prod |P_omega|",
            std::to_string(z.num_top()) + " top simplices exceeds matching cap " + std::to_string(cfg.matching_cap));
  }

  std::optional<CoverComplex> cover;
  ck.run("component", "an arbitrary connected component of the cover is built", [&] {
    cover.emplace(build_component(space, space.canonical_seed(), cfg.max_cells));
    return std::to_string(cover->cells.size()) + " cells, " + std::to_string(space.tuples().size()) +
           " involution tuples";
  });
  if (!cover) return finish();
  rep["component_cells"] = cover->cells.size();

  ck.run("phi involutions", "Phi_omega are fixed-point-free involutions of V and nested ones commute", [&] {
    std::size_t inv = 0, comm = 0;
    check_phi(space, *cover, inv, comm);
    return std::to_string(inv) + " involution cases, " + std::to_string(comm) + " commutation cases";
  });
  ck.run("tuple registry", "conjugated tuples stay in prod P_omega", [&] {
    for (std::size_t t = 0; t < space.tuples().size(); ++t)
      for (std::size_t s = 0; s < subs.size(); ++s)
        require(is_in_P_omega(z, space.component(static_cast<int>(t), static_cast<int>(s)), subs[s]),
                "tuple " + std::to_string(t) + " leaves P_" + to_string(subs[s]));
    return std::to_string(space.tuples().size()) + " tuples valid";
  });

  const PermutahedralComplex tomei = build_tomei(n);
  std::size_t deg_p = 0;
  if (!ck.run("covering", "p is well defined and a finite-fold covering of the Tomei manifold", [&] {
        const auto r = verify_covering(*cover, tomei);
        deg_p = r.degree;
        return "degree " + std::to_string(r.degree) + " over " + std::to_string(r.face_classes) + " face classes";
      }))
    return finish();
  rep["covering_degree"] = deg_p;

  std::optional<CellTriangulation> k;
  ck.run("manifold", "the triangulated cover is a closed pseudomanifold (a closed surface when n = 2)", [&] {
    k.emplace(triangulate(cover->pc));
    const auto v = validate_pseudomanifold(k->complex);
    require(v.valid(), v.summary());
    if (n == 2) {
      const auto s = verify_surface(k->complex);
      require(s.ok, s.witness);
    }
    return std::to_string(k->complex.size()) + " top simplices";
  });
  if (!k) return finish();

  ck.run("euler", "chi(cover) = degree(p) * chi(M)", [&] {
    const long chi_cells = euler_characteristic(k->classes, n);
    const long chi_simplices = euler_characteristic(k->complex);
    const long chi_base = euler_characteristic(face_classes(tomei), n);
    require(chi_cells == chi_simplices, "face-class and simplex counts disagree");
    require(chi_cells == static_cast<long>(deg_p) * chi_base, "chi is not multiplicative");
    return "chi = " + std::to_string(chi_cells) + " = " + std::to_string(deg_p) + " * " + std::to_string(chi_base);
  });

  std::optional<SimplicialMap> f;
  ck.run("f well defined", "f is well defined and simplicial on K", [&] {
    f.emplace(build_f(z, *cover, *k));
    return std::to_string(k->complex.num_vertices()) + " vertex classes";
  });
  if (!f) return finish();

  std::optional<DegreeReport> deg;
  ck.run("degree", "f_*[cover] = q'[Z] with q' > 0 and constant local degree", [&] {
    deg.emplace(degree(z, *cover, *k, *f));
    require(deg->degree > 0, "degree is not positive");
    require(deg->fiber_matches_cells, "preimage counts differ from cell counts");
    return "q' = " + std::to_string(deg->degree) + " over " + std::to_string(deg->signed_count.size()) +
           " simplices of Z'";
  });
  if (!deg) return finish();
  rep["q_component"] = deg->degree;
  rep["per_simplex_counts_checksum"] = hex(deg->checksum);

  ck.run("chain identity", "f_*(fundamental class of K) = q' (fundamental class of Z')", [&] {
    const auto image = push_forward(k->complex, fundamental_class(k->complex, deg->k_orientation), f->vertex_image,
                                    z.subdivision().complex);
    const auto& target = z.subdivision_orientation();
    for (std::size_t t = 0; t < image.size(); ++t)
      require(image[t] == deg->degree * target[t], "coefficient mismatch on simplex " + std::to_string(t));
    return "holds on all " + std::to_string(image.size()) + " coefficients";
  });

  if (k->complex.size() <= cfg.homology_limit) {
    ck.run("homology", "the cover is a connected closed oriented n-manifold", [&] {
      const auto h = homology(k->complex);
      require(h.betti[0] == 1, "not connected");
      require(h.betti[n] == 1 && h.torsion[n - 1].empty(), "top homology is not Z");
      require(h.euler() == euler_characteristic(k->complex), "Betti numbers disagree with chi");
      rep["homology"] = h.to_string();
      return h.to_string();
    });
  } else {
    ck.skip("homology", "the cover is a connected closed oriented n-manifold",
            std::to_string(k->complex.size()) + " simplices exceeds homology limit");
  }

  const std::string full_claim = "f_*[full cover] = q[Z] with q = 2^(n-1) prod |P_omega|";
  if (!q_formula) {
    ck.skip("full cover", full_claim, "P_omega counts unavailable");
  } else if (BigInt(z.num_top()) * (*q_formula) > BigInt(cfg.max_cells)) {
    ck.skip("full cover", full_claim, "|V| exceeds the cell cap");
  } else {
    ck.run("full cover", full_claim, [&] {
      CoverSpace full_space(z);
      const CoverComplex full = build_full(full_space, cfg.max_cells, cfg.matching_cap);
      std::vector<BigInt> fiber(z.num_top(), 0);
      for (const auto& v : full.cells) ++fiber[v.sigma];
      const BigInt per_sigma = *q_formula;
      for (std::size_t s = 0; s < z.num_top(); ++s)
        require(fiber[s] == per_sigma, "fiber over simplex " + std::to_string(s) + " is " + fiber[s].str());
      verify_covering(full, tomei);
      const auto kf = triangulate(full.pc);
      const auto ff = build_f(z, full, kf);
      const auto df = degree(z, full, kf, ff);
      long sum = 0;
      for (long d : df.component_degrees) sum += d;
      require(BigInt(df.degree) == *q_formula && BigInt(sum) == *q_formula, "degree of f on the full cover differs from q");
      return "|V| = " + std::to_string(full.cells.size()) + ", " + std::to_string(df.component_degrees.size()) +
             " components, degree " + std::to_string(df.degree) + " = q";
    });
  }
  return finish();
}

json tomei_report(int n, const RunConfig& cfg) {
  Checks ck;
  json rep;
  rep["n"] = n;
  const PermutahedralComplex pc = build_tomei(n);
  std::optional<FaceClasses> fc;
  ck.run("face classes", "M is 2^n permutahedra glued with 2^codim cells around every face", [&] {
    fc.emplace(face_classes(pc));
    rep["face_classes_by_codim"] = fc->count_by_codim;
    return std::to_string(pc.num_cells()) + " cells";
  });
  if (!fc) {
    rep["checks"] = ck.items();
    rep["status"] = ck.status();
    return rep;
  }
  const CellTriangulation k = triangulate(pc, *fc);
  rep["triangulation_simplices"] = k.complex.size();
  const long chi = euler_characteristic(*fc, n);
  rep["euler_characteristic"] = chi;
  ck.run("euler", "chi from face classes equals chi from the triangulation", [&] {
    require(chi == euler_characteristic(k.complex), "counts disagree");
    return "chi = " + std::to_string(chi);
  });
  ck.run("pseudomanifold", "M is a closed pseudomanifold", [&] {
    const auto v = validate_pseudomanifold(k.complex);
    require(v.valid(), v.summary());
    return std::to_string(k.complex.size()) + " top simplices";
  });
  ck.run("orientable", "M is oriented", [&] {
    orient(k.complex);
    return std::string("coherent orientation found");
  });
  if (n == 2)
    ck.run("surface", "M is a closed surface", [&] {
      const auto s = verify_surface(k.complex);
      require(s.ok, s.witness);
      return std::string("every vertex link is a cycle");
    });
  if (k.complex.size() <= cfg.homology_limit)
    ck.run("homology", "integral homology of M", [&] {
      const auto h = homology(k.complex);
      require(h.euler() == chi, "Betti numbers disagree with chi");
      require(h.betti[n] == 1, "top homology is not Z");
      rep["homology"] = h.to_string();
      return h.to_string();
    });
  rep["checks"] = ck.items();
  rep["status"] = ck.status();
  return rep;
}

std::string text_summary(const json& report) {
  std::ostringstream os;
  if (report.contains("checks"))
    for (const auto& c : report["checks"]) {
      std::string r = c["result"].get<std::string>();
      std::transform(r.begin(), r.end(), r.begin(), ::toupper);
      os << '[' << r << "] " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << '\n';
    }
  for (const char* key : {"component_cells", "covering_degree", "q_component", "q_formula", "per_simplex_counts_checksum",
                          "face_classes_by_codim", "euler_characteristic", "homology"})
    if (report.contains(key) && !report[key].is_null()) os << key << ": " << report[key].dump() << '\n';
  if (report.contains("status")) os << "status: " << report["status"].get<std::string>() << '\n';
  return os.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    json doc;
    int code = kExitPass;
    switch (cfg.mode) {
      case Mode::Validate: {
        const auto in = read_complex_file(cfg.input);
        const auto v = validate_pseudomanifold(in.complex);
        doc = {{"valid", v.valid()},
               {"closed", v.closed()},
               {"components", v.components},
               {"boundary_faces", v.boundary_faces},
               {"branching_faces", v.branching_faces},
               {"summary", v.summary()}};
        out << (v.valid() ? "[PASS] " : "[FAIL] ") << "pseudomanifold: " << v.summary() << '\n';
        code = v.valid() ? kExitPass : kExitCheckFailure;
        break;
      }
      case Mode::Subdivide: {
        const auto in = read_complex_file(cfg.input);
        const auto sd = barycentric_subdivide(in.complex);
        const Orientation* o = nullptr;
        Orientation induced;
        if (in.orientation) {
          induced = subdivision_orientation(sd, *in.orientation);
          o = &induced;
        }
        doc = complex_to_json(sd.complex, &sd.coloring, o);
        out << "subdivided: " << sd.complex.num_vertices() << " vertices, " << sd.complex.size() << " top simplices\n";
        break;
      }
      case Mode::Tomei: {
        if (cfg.n < 1 || cfg.n > 4) {
          err << "error: tomei needs 1 <= n <= 4\n";
          return kExitUsage;
        }
        doc = tomei_report(cfg.n, cfg);
        const auto pc = build_tomei(cfg.n);
        const auto k = triangulate(pc);
        doc["cells"] = cell_complex_to_json(pc);
        doc["complex"] = complex_to_json(k.complex);
        out << text_summary(doc);
        code = doc["status"] == "pass" ? kExitPass : kExitCheckFailure;
        break;
      }
      case Mode::Cover: {
        const auto in = read_complex_file(cfg.input);
        const auto z = ColoredPseudomanifold::prepare(in.complex, in.coloring, in.orientation);
        CoverSpace space(z);
        const auto cover = build_component(space, space.canonical_seed(), cfg.max_cells);
        const auto r = verify_covering(cover, build_tomei(z.dim()));
        doc["report"] = {{"component_cells", r.cells}, {"covering_degree", r.degree}};
        doc["component"] = cover_to_json(cover);
        doc["complex"] = complex_to_json(triangulate(cover.pc).complex);
        out << "component: " << r.cells << " cells, covering degree " << r.degree << '\n';
        break;
      }
      case Mode::Verify: {
        doc = verify_report(read_complex_file(cfg.input), cfg);
        out << text_summary(doc);
        code = doc["status"] == "pass" ? kExitPass : kExitCheckFailure;
        break;
      }
      case Mode::Homology: {
        const auto in = read_complex_file(cfg.input);
        const auto h = homology(in.complex);
        doc = {{"betti", h.betti}, {"homology", h.to_string()}, {"euler_characteristic", h.euler()}};
        out << "homology: " << h.to_string() << '\n';
        break;
      }
      case Mode::Report: {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(cfg.input))
          if (e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        doc["files"] = json::object();
        for (const auto& p : files) {
          const json raw = read_json_file(p.string());
          const std::string expect = raw.value("expect", "pass");
          json r;
          try {
            r = verify_report(complex_from_json(raw), cfg);
          } catch (const InvalidComplex& e) {
            r = {{"status", "fail"}, {"error", e.what()}};
          }
          r["expected"] = expect;
          const bool ok = r["status"] == expect;
          if (!ok) code = kExitCheckFailure;
          out << (ok ? "[PASS] " : "[FAIL] ") << p.filename().string() << ": " << r["status"].get<std::string>()
              << " (expected " << expect << ")\n";
          doc["files"][p.filename().string()] = std::move(r);
        }
        break;
      }
    }
    if (!cfg.output.empty()) write_json_file(cfg.output, doc);
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("REALIZER_MAX_CELLS")) {
    try {
      cfg.max_cells = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: REALIZER_MAX_CELLS is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Realizes the fundamental class of a pseudomanifold by a finite cover of the Tomei manifold"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("-i,--input", cfg.input, "input complex (JSON), or corpus directory for report");
    if (needs_input) opt->required();
    sub->add_option("-o,--out", cfg.output, "write the JSON document here");
    sub->add_option("--max-cells", cfg.max_cells, "cap on cover cells")->check(CLI::PositiveNumber);
    sub->add_option("--matching-cap", cfg.matching_cap, "largest |U| for exact |P_omega| counting")
        ->check(CLI::PositiveNumber);
    sub->add_option("--homology-limit", cfg.homology_limit, "largest triangulation for homology")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", cfg.deterministic, "reserved; always on");
  };
  struct ModeInfo {
    Mode mode;
    const char* name;
    const char* help;
  };
  const std::vector<ModeInfo> modes = {
      {Mode::Validate, "validate", "check that the input is a closed strongly connected pseudomanifold"},
      {Mode::Subdivide, "subdivide", "write the barycentric subdivision with its dimension coloring"},
      {Mode::Tomei, "tomei", "build and check the Tomei manifold of dimension n"},
      {Mode::Cover, "cover", "build the connected cover component of the canonical seed"},
      {Mode::Verify, "verify", "run every check on one complex"},
      {Mode::Homology, "homology", "integral homology of the input complex"},
      {Mode::Report, "report", "verify every *.json complex in a directory against its \"expect\" field"}};
  std::vector<std::pair<Mode, CLI::App*>> subs;
  for (const auto& [mode, name, help] : modes) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, mode != Mode::Tomei);
    if (mode == Mode::Tomei) sub->add_option("-n,--n", cfg.n, "dimension")->required();
    subs.emplace_back(mode, sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& [mode, sub] : subs)
    if (sub->parsed()) cfg.mode = mode;
  return run(cfg, out, err);
}

}  // namespace realizer
