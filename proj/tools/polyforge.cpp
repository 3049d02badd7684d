// polyforge: command-line front end for the polytope toolkit.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "polyforge/decomp.hpp"
#include "polyforge/equiv.hpp"
#include "polyforge/error.hpp"
#include "polyforge/families.hpp"
#include "polyforge/hull.hpp"
#include "polyforge/io.hpp"
#include "polyforge/render.hpp"

using namespace polyforge;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
  std::size_t budget = 1000000;
  std::uint64_t seed = 1;
};

VPolytope load(const std::string& path) { return parse_vpoly(read_file(path)); }

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

std::string vec(const Vector& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
  return "(" + s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polytope decomposability toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--budget", opt.budget, "Triangular-chain search cap (node expansions)")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized modes")->capture_default_str();
  int status = kOk;
  std::function<void()> action;

  // build
  std::string family, eps = "1/10", height = "1", out;
  std::size_t dim = 4;
  auto* build = app.add_subcommand("build", "Construct a polytope family member");
  build->add_option("--family", family, "P, Pprime, BarP, BarPprime, Q, Qprime, DeltaBase, StackedQ, StackedQprime")
      ->required();
  build->add_option("--dim", dim, "Dimension d")->capture_default_str();
  build->add_option("--eps", eps, "Perturbation parameter")->capture_default_str();
  build->add_option("--stack-height", height, "Pyramid apex height")->capture_default_str();
  build->add_option("-o,--output", out, "Output .vpoly (default stdout)");
  build->callback([&] {
    action = [&] {
      ConstructionParams params;
      params.d = dim;
      params.eps = parse_scalar(eps);
      params.stack_height = parse_scalar(height);
      emit(out, emit_vpoly(build_family(parse_family_id(family), params)));
    };
  });

  // hull
  std::string input, second;
  auto* hull = app.add_subcommand("hull", "Facets of a vertex description");
  hull->add_option("input", input, ".vpoly file")->required();
  hull->add_option("-o,--output", out, "Output .hpoly (default stdout)");
  hull->callback([&] {
    action = [&] {
      const VPolytope p = load(input);
      require_irredundant(p);
      emit(out, emit_hpoly(convex_hull(p).polytope));
    };
  });

  // lattice
  auto* lattice = app.add_subcommand("lattice", "f-vector and edges");
  lattice->add_option("input", input, ".vpoly file")->required();
  lattice->callback([&] {
    action = [&] {
      const VPolytope p = load(input);
      require_irredundant(p);
      const FaceLattice lat = face_lattice(convex_hull(p).incidence);
      std::string s = "f-vector:";
      for (auto f : lat.f_vector()) s += " " + std::to_string(f);
      s += "\n";
      const GeometricGraph g = edge_graph(lat, p);
      for (const auto& [a, b] : g.edges()) s += "edge " + g.label(a) + " " + g.label(b) + "\n";
      std::cout << s;
    };
  });

  // equiv
  std::string map_out;
  auto* equiv = app.add_subcommand("equiv", "Combinatorial equivalence");
  equiv->add_option("first", input, ".vpoly file")->required();
  equiv->add_option("second", second, ".vpoly file")->required();
  equiv->add_option("--map", map_out, "Write the isomorphism as JSON");
  equiv->callback([&] {
    action = [&] {
      const auto iso = combinatorially_equivalent(load(input), load(second));
      if (!iso) {
        std::cout << "not equivalent\n";
        return;
      }
      std::string s = "equivalent\n";
      for (const auto& [a, b] : iso->vertex_map) s += "  " + a + " -> " + b + "\n";
      std::cout << s;
      if (!map_out.empty()) write_file_atomic(map_out, isomorphism_to_json(*iso));
    };
  });

  // decide
  std::string q_out, r_out;
  auto* decide = app.add_subcommand("decide", "Decide Minkowski decomposability");
  decide->add_option("input", input, ".vpoly file")->required();
  decide->add_option("--q", q_out, "Write the first summand (decomposable input)");
  decide->add_option("--r", r_out, "Write the second summand (decomposable input)");
  decide->callback([&] {
    action = [&] {
      const VPolytope p = load(input);
      require_irredundant(p);
      const DecompositionVerdict v = is_decomposable(p);
      std::cout << (v.decomposable ? "decomposable" : "indecomposable") << "\n"
                << "summand space dimension " << v.space.dimension() << " (d+1 = " << p.dim() + 1 << ")\n";
      if (v.decomposable && (!q_out.empty() || !r_out.empty())) {
        const SummandPair s = extract_summands(p);
        if (!q_out.empty()) write_file_atomic(q_out, emit_vpoly(s.q));
        if (!r_out.empty()) write_file_atomic(r_out, emit_vpoly(s.r));
      }
    };
  });

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Produce a checkable certificate");
  certify_cmd->add_option("input", input, ".vpoly file")->required();
  certify_cmd->add_option("-o,--output", out, "Output certificate JSON (default stdout)");
  certify_cmd->callback([&] {
    action = [&] {
      const VPolytope p = load(input);
      require_irredundant(p);
      const Certificate c = certify(p, opt.budget);
      emit(out, certificate_to_json(c));
      if (!out.empty() && out != "-") {
        std::cout << (c.asserts_indecomposable() ? "indecomposable" : "decomposable") << ": " << to_string(c.kind)
                  << "\n";
      }
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a certificate against a polytope");
  verify->add_option("certificate", second, "Certificate JSON")->required();
  verify->add_option("input", input, ".vpoly file")->required();
  verify->callback([&] {
    action = [&] {
      const Certificate c = certificate_from_json(read_file(second));
      const CheckResult r = verify_certificate(c, load(input));
      if (r) {
        std::cout << "valid " << to_string(c.kind) << ": "
                  << (c.asserts_indecomposable() ? "indecomposable" : "decomposable") << "\n";
      } else {
        std::cout << "invalid " << to_string(c.kind) << ": " << r.reason << "\n";
        status = kRefuted;
      }
    };
  });

  // sum
  auto* sum = app.add_subcommand("sum", "Minkowski sum");
  sum->add_option("first", input, ".vpoly file")->required();
  sum->add_option("second", second, ".vpoly file")->required();
  sum->add_option("-o,--output", out, "Output .vpoly (default stdout)");
  sum->callback([&] { action = [&] { emit(out, emit_vpoly(minkowski_sum(load(input), load(second)))); }; });

  // slice
  std::string hyperplane;
  auto* slice = app.add_subcommand("slice", "Cross-section by a generic hyperplane");
  slice->add_option("input", input, ".vpoly file")->required();
  slice->add_option("--hyperplane", hyperplane, "a_1,...,a_d=c")->required();
  slice->add_option("-o,--output", out, "Output .vpoly (default stdout)");
  slice->callback([&] {
    action = [&] { emit(out, emit_vpoly(cross_section(load(input), parse_hyperplane(hyperplane)))); };
  });

  // lemma1
  std::string direction, kval = "2";
  std::size_t random_count = 0;
  auto* lemma = app.add_subcommand("lemma1", "Check P+[0,a] against P+[0,ka]");
  lemma->add_option("input", input, ".vpoly file (omit with --random)");
  lemma->add_option("--direction", direction, "a_1,...,a_d");
  lemma->add_option("--k", kval, "Scale k")->capture_default_str();
  lemma->add_option("--random", random_count, "Check this many random instances instead (uses --seed)");
  lemma->callback([&] {
    action = [&] {
      auto report_one = [&](const VPolytope& p, const Vector& a, const Scalar& k) {
        const Lemma1Report r = verify_lemma1(p, a, k);
        std::cout << (r.passed ? "pass" : "FAIL") << " vertices=" << r.vertices << " near=" << r.near_facets
                  << " far=" << r.far_facets << " side=" << r.side_facets << " a=" << vec(a) << " k=" << k << "\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        if (!r.passed) status = kRefuted;
      };
      if (random_count > 0) {
        std::mt19937_64 rng(opt.seed);
        const Scalar ks[] = {Scalar(1, 3), Scalar(2), Scalar(5)};
        for (std::size_t i = 0; i < random_count; ++i) {
          const std::size_t d = 3 + rng() % 2;
          const VPolytope p = random_polytope(rng, d, 6 + rng() % 7);
          Vector a;
          do {
            a.clear();
            for (std::size_t j = 0; j < d; ++j) a.push_back(Scalar(static_cast<long>(rng() % 7) - 3));
          } while (is_zero(a));
          report_one(p, a, ks[rng() % 3]);
        }
        return;
      }
      if (input.empty() || direction.empty()) throw ParseError("lemma1 needs an input file and --direction, or --random");
      report_one(load(input), parse_vector(direction), parse_scalar(kval));
    };
  });

  // maintheorem
  auto* theorem = app.add_subcommand("maintheorem", "Walk the segment-summand theorem on a polytope");
  theorem->add_option("input", input, ".vpoly file")->required();
  theorem->callback([&] {
    action = [&] {
      const MainTheoremReport r = check_main_theorem_instance(load(input), opt.budget);
      for (const auto& s : r.steps) std::cout << (s.ok ? "ok   " : "FAIL ") << s.name << ": " << s.detail << "\n";
      if (r.precondition_failed) {
        std::cout << "precondition failed\n";
      } else {
        std::cout << (r.passed ? "passed" : "failed") << "\n";
        if (!r.passed) status = kRefuted;
      }
    };
  });

  // figure
  std::string coords;
  std::optional<std::size_t> schlegel;
  auto* figure = app.add_subcommand("figure", "SVG projection");
  figure->add_option("input", input, ".vpoly file")->required();
  auto* coords_opt = figure->add_option("--coords", coords, "Axes i,j[,k] (1-based)");
  figure->add_option("--schlegel", schlegel, "Schlegel diagram over this facet index")->excludes(coords_opt);
  figure->add_option("-o,--output", out, "Output .svg (default stdout)");
  figure->callback([&] {
    action = [&] {
      RenderSpec spec;
      if (schlegel) {
        spec.projection = RenderSpec::Projection::Schlegel;
        spec.facet = *schlegel;
      } else if (!coords.empty()) {
        spec.axes.clear();
        for (const auto& x : parse_vector(coords)) {
          if (sgn(x) <= 0 || x.get_den() != 1) throw ParseError("axis indices must be positive integers");
          spec.axes.push_back(x.get_num().get_ui());
        }
      }
      emit(out, render_svg(load(input), spec));
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    action();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const DecomposableInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return status;
}
