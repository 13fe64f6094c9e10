#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fpppart/assignment_io.hpp"
#include "fpppart/errors.hpp"
#include "fpppart/metrics.hpp"
#include "fpppart/partitioner.hpp"
#include "commands.hpp"
#include "logging.hpp"

namespace fpp::cli {

namespace {

struct VerifyCase {
  std::string name;
  std::function<bool(std::string&)> fn;
};

using Cases = std::vector<VerifyCase>;

constexpr uint32_t kOrders[] = {2, 3, 4, 5, 7, 8, 9};

std::string fmt_double(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

std::vector<EdgeAssignment> assign_all(const EdgePartitioner& part,
                                       const std::vector<EdgeRecord>& edges) {
  std::vector<EdgeAssignment> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({e.u, e.v, part.assign(e.u, e.v)});
  return out;
}

std::vector<EdgeRecord> fuzz_graph(int which, uint64_t seed) {
  switch (which) {
    case 0: return drain(*gen_complete(100));
    case 1: return drain(*gen_random(1000, 20000, seed));
    default: return drain(*gen_preferential(1000, 5, seed));
  }
}

const char* fuzz_graph_name(int which) {
  switch (which) {
    case 0: return "k100";
    case 1: return "random";
    default: return "pa";
  }
}

// ---- field axioms ---------------------------------------------------------

void add_field_cases(Cases& cases) {
  for (uint32_t q : kOrders) {
    auto field_of = [q] {
      uint32_t p = 0;
      uint32_t k = 0;
      is_prime_power(q, &p, &k);
      return GaloisField::make(p, k);
    };
    const std::string prefix = "field.q" + std::to_string(q) + ".";

    cases.push_back({prefix + "add_group", [field_of, q](std::string&) {
      const auto gf = field_of();
      for (uint32_t a = 0; a < q; ++a) {
        if (gf.add(a, 0) != a || gf.add(a, gf.neg(a)) != 0) return false;
        for (uint32_t b = 0; b < q; ++b) {
          if (gf.add(a, b) != gf.add(b, a)) return false;
          for (uint32_t c = 0; c < q; ++c) {
            if (gf.add(gf.add(a, b), c) != gf.add(a, gf.add(b, c))) return false;
          }
        }
      }
      return true;
    }});

    cases.push_back({prefix + "mul_group", [field_of, q](std::string&) {
      const auto gf = field_of();
      for (uint32_t a = 0; a < q; ++a) {
        if (gf.mul(a, 1) != a || gf.mul(a, 0) != 0) return false;
        if (a != 0 && gf.mul(a, gf.inv(a)) != 1) return false;
        for (uint32_t b = 0; b < q; ++b) {
          if (gf.mul(a, b) != gf.mul(b, a)) return false;
          for (uint32_t c = 0; c < q; ++c) {
            if (gf.mul(gf.mul(a, b), c) != gf.mul(a, gf.mul(b, c))) return false;
          }
        }
      }
      return true;
    }});

    cases.push_back({prefix + "distributive", [field_of, q](std::string&) {
      const auto gf = field_of();
      for (uint32_t a = 0; a < q; ++a) {
        for (uint32_t b = 0; b < q; ++b) {
          for (uint32_t c = 0; c < q; ++c) {
            if (gf.mul(a, gf.add(b, c)) != gf.add(gf.mul(a, b), gf.mul(a, c))) return false;
          }
        }
      }
      return true;
    }});

    cases.push_back({prefix + "encode_roundtrip", [field_of, q](std::string&) {
      const auto gf = field_of();
      for (uint32_t a = 0; a < q; ++a) {
        if (gf.encode(gf.decode(a)) != a) return false;
      }
      return true;
    }});

    cases.push_back({prefix + "inv_involution", [field_of, q](std::string&) {
      const auto gf = field_of();
      for (uint32_t a = 1; a < q; ++a) {
        if (gf.inv(gf.inv(a)) != a) return false;
      }
      return true;
    }});
  }
}

// ---- plane axioms ----------------------------------------------------------

void add_axiom_cases(Cases& cases) {
  for (uint32_t q : kOrders) {
    const std::string prefix = "plane.q" + std::to_string(q) + ".";
    auto report_of = [q] { return check_plane_axioms(ProjPlane::build(q)); };
    cases.push_back({prefix + "counts", [report_of](std::string&) { return report_of().counts_ok; }});
    cases.push_back({prefix + "line_size", [report_of](std::string&) { return report_of().line_size_ok; }});
    cases.push_back({prefix + "point_degree", [report_of](std::string&) { return report_of().point_degree_ok; }});
    cases.push_back({prefix + "duality", [report_of](std::string&) { return report_of().duality_ok; }});
    cases.push_back({prefix + "line_pairs", [report_of](std::string&) { return report_of().line_pairs_ok; }});
    cases.push_back({prefix + "point_pairs", [report_of](std::string&) { return report_of().point_pairs_ok; }});
    cases.push_back({prefix + "quadrilateral", [report_of](std::string&) { return report_of().quadrilateral_ok; }});
  }
}

// ---- subset family multiplicity -------------------------------------------

void add_family_cases(Cases& cases) {
  for (uint32_t q : kOrders) {
    cases.push_back({"family.fpp.q" + std::to_string(q), [q](std::string& detail) {
      const auto plane = ProjPlane::build(q);
      const auto res = family_multiplicity_check(plane.lines(), plane.n());
      detail = "r=" + std::to_string(res.r);
      return res.pairwise_ok && res.r == q + 1 && res.pass;
    }});
  }
  for (uint32_t s = 2; s <= 8; ++s) {
    cases.push_back({"family.edge2d.s" + std::to_string(s), [s](std::string& detail) {
      const auto res =
          family_multiplicity_check(edge2d_family(s), static_cast<uint64_t>(s) * s);
      detail = "r=" + std::to_string(res.r);
      return res.pairwise_ok && res.r == 2u * s - 1 && res.pass;
    }});
  }
}

// ---- replication bounds over a fuzz grid -----------------------------------

void add_bound_cases(Cases& cases) {
  for (Method method : {Method::Fpp, Method::Dfpp}) {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
      const uint64_t parts = static_cast<uint64_t>(q) * q + q + 1;
      for (int graph = 0; graph < 3; ++graph) {
        for (uint64_t seed = 0; seed < 3; ++seed) {
          std::string name = "bound." + std::string(method_name(method)) + ".q" +
                             std::to_string(q) + "." + fuzz_graph_name(graph) + ".seed" +
                             std::to_string(seed);
          cases.push_back({std::move(name), [method, parts, graph, seed](std::string& detail) {
            PartitionerConfig cfg;
            cfg.method = method;
            cfg.parts = parts;
            cfg.seed = seed;
            const auto part = EdgePartitioner::make(cfg);
            MetricsAccumulator acc(parts);
            for (const auto& a : assign_all(part, fuzz_graph(graph, seed))) acc.add(a);
            const auto res = check_constrained_bound(method, parts, acc);
            detail = "max=" + std::to_string(res.max_replicas) +
                     " bound=" + std::to_string(res.bound);
            return res.pass;
          }});
        }
      }
    }
  }
  for (Method method : {Method::Edge2d, Method::Torus}) {
    for (uint64_t parts : {4ull, 9ull, 16ull, 25ull}) {
      for (int graph = 0; graph < 3; ++graph) {
        for (uint64_t seed = 0; seed < 2; ++seed) {
          std::string name = "bound." + std::string(method_name(method)) + ".n" +
                             std::to_string(parts) + "." + fuzz_graph_name(graph) + ".seed" +
                             std::to_string(seed);
          cases.push_back({std::move(name), [method, parts, graph, seed](std::string& detail) {
            PartitionerConfig cfg;
            cfg.method = method;
            cfg.parts = parts;
            cfg.seed = seed;
            const auto part = EdgePartitioner::make(cfg);
            MetricsAccumulator acc(parts);
            for (const auto& a : assign_all(part, fuzz_graph(graph, seed))) acc.add(a);
            const auto res = check_constrained_bound(method, parts, acc);
            detail = "max=" + std::to_string(res.max_replicas) +
                     " bound=" + std::to_string(res.bound);
            return res.pass;
          }});
        }
      }
    }
  }
  cases.push_back({"bound.sqrt_window.all_prime_powers", [](std::string& detail) {
    uint32_t checked = 0;
    for (uint32_t q = 2; q <= (1u << 16); ++q) {
      if (!is_prime_power(q)) continue;
      ++checked;
      const uint64_t nprime = static_cast<uint64_t>(q) * q + q + 1;
      if (nprime > (static_cast<uint64_t>(q) + 1) * (q + 1)) return false;
      if (static_cast<uint64_t>(q) * q > nprime) return false;
    }
    detail = std::to_string(checked) + " prime powers";
    return checked > 6500;
  }});
}

// ---- q=2 worked example -----------------------------------------------------

const std::vector<EdgeRecord> kSampleEdges = {
    {0, 1}, {0, 3}, {1, 5}, {1, 4}, {2, 0}, {2, 3}, {3, 4}, {6, 4},
};

void add_example_cases(Cases& cases) {
  struct Golden {
    uint32_t line_a, line_b;
    std::array<uint32_t, 3> point;
  };
  const std::vector<Golden> goldens = {
      {0, 1, {0, 1, 0}}, {0, 3, {0, 1, 1}}, {1, 5, {1, 1, 1}}, {1, 4, {1, 0, 1}},
      {0, 2, {0, 0, 1}}, {2, 3, {1, 1, 0}}, {3, 4, {1, 0, 1}}, {4, 6, {1, 0, 0}},
  };
  for (const auto& g : goldens) {
    std::string name = "example.isect.S" + std::to_string(g.line_a) + "xS" +
                       std::to_string(g.line_b);
    cases.push_back({std::move(name), [g](std::string& detail) {
      const auto plane = ProjPlane::build(2);
      const uint32_t idx = plane.line_intersection(g.line_a, g.line_b);
      const auto& pt = plane.points()[idx].c;
      detail = "(" + std::to_string(pt[0]) + ":" + std::to_string(pt[1]) + ":" +
               std::to_string(pt[2]) + ")";
      return pt == g.point;
    }});
  }

  cases.push_back({"example.rf_15_over_7", [](std::string& detail) {
    PartitionerConfig cfg;
    cfg.method = Method::Dfpp;
    cfg.parts = 7;
    const auto part = EdgePartitioner::make(cfg);
    const auto report = compute_metrics(assign_all(part, kSampleEdges), 7);
    detail = "rf=" + fmt_double(report.rf);
    uint64_t replica_sum = 0;
    for (const auto& pp : report.per_part) replica_sum += pp.vertices;
    return replica_sum == 15 && report.total_vertices == 7 && report.rf == 15.0 / 7.0 &&
           report.rf < std::sqrt(7.0);
  }});

  cases.push_back({"example.dfpp_structure", [](std::string&) {
    PartitionerConfig cfg;
    cfg.method = Method::Dfpp;
    cfg.parts = 7;
    const auto part = EdgePartitioner::make(cfg);
    const auto& phi = part.matching()->phi;
    std::set<uint32_t> image(phi.begin(), phi.end());
    if (image.size() != 7) return false;
    for (uint64_t i = 0; i < 7; ++i) {
      const auto& line = part.plane()->lines()[i];
      if (!std::binary_search(line.begin(), line.end(), phi[i])) return false;
      if (part.assign(i, i + 7) != phi[i]) return false;
    }
    return true;
  }});
}

// ---- complete graph lower bound ---------------------------------------------

void add_lower_bound_cases(Cases& cases) {
  for (Method method : {Method::Fpp, Method::Dfpp, Method::Edge2d, Method::Torus}) {
    for (uint64_t parts : {7ull, 13ull, 21ull}) {
      std::string name = "lower_bound.k50." + std::string(method_name(method)) + ".n" +
                         std::to_string(parts);
      cases.push_back({std::move(name), [method, parts](std::string& detail) {
        PartitionerConfig cfg;
        cfg.method = method;
        cfg.parts = parts;
        cfg.seed = 1;
        const auto part = EdgePartitioner::make(cfg);
        const auto report = compute_metrics(assign_all(part, drain(*gen_complete(50))), parts);
        const double bound = complete_graph_lower_bound(50, parts, report.alpha);
        detail = "rf=" + fmt_double(report.rf) + " >= " + fmt_double(bound);
        return report.rf >= bound;
      }});
    }
  }
}

// ---- determinism -------------------------------------------------------------

void add_determinism_cases(Cases& cases) {
  cases.push_back({"determinism.fpp_order_independent", [](std::string&) {
    auto edges = drain(*gen_random(600, 5000, 31));
    PartitionerConfig cfg;
    cfg.method = Method::Fpp;
    cfg.parts = 21;
    cfg.seed = 5;
    const auto part = EdgePartitioner::make(cfg);
    std::map<std::pair<uint64_t, uint64_t>, uint32_t> base;
    for (const auto& a : assign_all(part, edges)) base[{a.u, a.v}] = a.pid;
    std::mt19937_64 rng(2);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (const auto& a : assign_all(part, edges)) {
      if (base.at({a.u, a.v}) != a.pid) return false;
    }
    return true;
  }});

  cases.push_back({"determinism.worker_count_invariant", [](std::string&) {
    const auto edges = drain(*gen_random(600, 5000, 32));
    PartitionerConfig cfg;
    cfg.method = Method::Fpp;
    cfg.parts = 31;
    cfg.seed = 9;
    const auto part = EdgePartitioner::make(cfg);
    std::vector<std::string> outputs;
    for (int workers : {1, 2, 5}) {
      std::ostringstream buf;
      AssignmentWriter writer(buf, AssignmentFormat::Tsv);
      auto src = make_vector_source(edges);
      partition_stream(*src, part, workers, [&](const EdgeAssignment& a) { writer.write(a); });
      outputs.push_back(buf.str());
    }
    return outputs[0] == outputs[1] && outputs[0] == outputs[2];
  }});

  cases.push_back({"determinism.dfpp_repeat_runs", [](std::string&) {
    const auto edges = drain(*gen_preferential(800, 4, 12));
    std::vector<std::string> outputs;
    for (int round = 0; round < 2; ++round) {
      PartitionerConfig cfg;
      cfg.method = Method::Dfpp;
      cfg.parts = 13;
      const auto part = EdgePartitioner::make(cfg);
      std::ostringstream buf;
      AssignmentWriter writer(buf, AssignmentFormat::Tsv);
      auto src = make_vector_source(edges);
      partition_stream(*src, part, 1, [&](const EdgeAssignment& a) { writer.write(a); });
      outputs.push_back(buf.str());
    }
    return outputs[0] == outputs[1];
  }});

  cases.push_back({"determinism.metrics_merge_order", [](std::string&) {
    const auto edges = drain(*gen_random(400, 3000, 8));
    PartitionerConfig cfg;
    cfg.method = Method::Edge2d;
    cfg.parts = 16;
    const auto part = EdgePartitioner::make(cfg);
    const auto assignments = assign_all(part, edges);

    std::vector<MetricsAccumulator> chunks(4, MetricsAccumulator(16));
    for (size_t i = 0; i < assignments.size(); ++i) chunks[i % 4].add(assignments[i]);
    MetricsAccumulator forward(16);
    for (const auto& c : chunks) forward.merge(c);
    MetricsAccumulator backward(16);
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) backward.merge(*it);

    const auto a = forward.finalize();
    const auto b = backward.finalize();
    return a.balance == b.balance && a.rf == b.rf && a.alpha == b.alpha &&
           a.max_replicas == b.max_replicas;
  }});
}

// ---- replication factor advantage -------------------------------------------

void add_trend_cases(Cases& cases) {
  cases.push_back({"trend.k500.fpp_vs_edge2d", [](std::string& detail) {
    const auto edges = drain(*gen_complete(500));

    PartitionerConfig fpp_cfg;
    fpp_cfg.method = Method::Fpp;
    fpp_cfg.parts = 307;  // 17^2 + 17 + 1
    const auto fpp_part = EdgePartitioner::make(fpp_cfg);
    const auto fpp_report = compute_metrics(assign_all(fpp_part, edges), 307);

    PartitionerConfig grid_cfg;
    grid_cfg.method = Method::Edge2d;
    grid_cfg.parts = 324;  // 18^2
    const auto grid_part = EdgePartitioner::make(grid_cfg);
    const auto grid_report = compute_metrics(assign_all(grid_part, edges), 324);

    const double ratio = fpp_report.rf / grid_report.rf;
    detail = "rf_fpp=" + fmt_double(fpp_report.rf) + " rf_edge2d=" +
             fmt_double(grid_report.rf) + " ratio=" + fmt_double(ratio);
    return ratio >= 0.40 && ratio <= 0.65;
  }});
}

}  // namespace

int run_verify(const VerifyArgs& args) {
  Cases cases;
  const std::string& suite = args.suite;
  const bool all = suite == "default";
  if (all || suite == "fields") add_field_cases(cases);
  if (all || suite == "axioms") add_axiom_cases(cases);
  if (all || suite == "families") add_family_cases(cases);
  if (all || suite == "bounds") add_bound_cases(cases);
  if (all || suite == "example") add_example_cases(cases);
  if (all || suite == "lower-bound") add_lower_bound_cases(cases);
  if (all || suite == "determinism") add_determinism_cases(cases);
  if (all || suite == "trend") add_trend_cases(cases);
  if (cases.empty()) {
    throw ConfigError("unknown suite '" + suite +
                      "' (want default|fields|axioms|families|bounds|example|lower-bound|"
                      "determinism|trend)");
  }

  uint32_t failures = 0;
  for (const auto& c : cases) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[ ok ] " : "[FAIL] ") << c.name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << '\n';
  }
  std::cout << cases.size() << " checks, " << cases.size() - failures << " passed, " << failures
            << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace fpp::cli
