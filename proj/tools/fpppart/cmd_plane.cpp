#include <fstream>
#include <iostream>

#include <json.hpp>

#include "fpppart/errors.hpp"
#include "fpppart/matching.hpp"
#include "fpppart/projective_plane.hpp"
#include "commands.hpp"
#include "logging.hpp"

namespace fpp::cli {

namespace {

// Exhaustive axiom checks are quadratic in n; past this order they only run
// when forced.
constexpr uint32_t kAxiomAutoMaxOrder = 64;

}  // namespace

int run_plane(const PlaneArgs& args) {
  const ProjPlane plane = ProjPlane::build(args.q);

  nlohmann::json dump;
  dump["q"] = plane.q();
  dump["n"] = plane.n();
  dump["field"] = {
      {"p", plane.field().p()}, {"k", plane.field().k()}, {"modulus", plane.field().spec().modulus}};

  auto& points = dump["points"] = nlohmann::json::array();
  for (const auto& pt : plane.points()) points.push_back({pt.c[0], pt.c[1], pt.c[2]});
  dump["lines"] = plane.lines();

  if (args.with_matching) {
    dump["phi"] = perfect_matching(plane).phi;
  }

  bool axioms_ok = true;
  if (args.q <= kAxiomAutoMaxOrder || args.force_check) {
    const auto report = check_plane_axioms(plane);
    dump["axioms"] = {
        {"counts", report.counts_ok},
        {"line_size", report.line_size_ok},
        {"point_degree", report.point_degree_ok},
        {"duality", report.duality_ok},
        {"line_pairs", report.line_pairs_ok},
        {"point_pairs", report.point_pairs_ok},
        {"quadrilateral", report.quadrilateral_ok},
    };
    axioms_ok = report.all();
    std::cerr << "plane q=" << plane.q() << ": " << plane.n() << " points, " << plane.n()
              << " lines, " << plane.q() + 1 << " points per line; axioms "
              << (axioms_ok ? "pass" : "FAIL") << '\n';
  } else {
    dump["axioms"] = "skipped (order above " + std::to_string(kAxiomAutoMaxOrder) +
                     ", rerun with --check)";
    std::cerr << "plane q=" << plane.q() << ": axiom check skipped, use --check to force\n";
  }

  if (args.output.empty()) {
    std::cout << dump.dump(2) << '\n';
  } else {
    std::ofstream out(args.output);
    if (!out) throw IoError("cannot write " + args.output);
    out << dump.dump(2) << '\n';
    log_info("plane dump written to " + args.output);
  }
  return axioms_ok ? 0 : 1;
}

}  // namespace fpp::cli
