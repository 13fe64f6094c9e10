#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fpppart/errors.hpp"
#include "fpppart/graph_io.hpp"

using fpp::EdgeRecord;
using fpp::ReadOptions;

namespace {

struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("fpppart_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".tsv");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

std::multiset<std::pair<uint64_t, uint64_t>> canonical_multiset(
    const std::vector<EdgeRecord>& edges) {
  std::multiset<std::pair<uint64_t, uint64_t>> out;
  for (const auto& e : edges) out.insert(std::minmax(e.u, e.v));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("graph_io");

TEST_CASE("reads whitespace-separated pairs and skips comments") {
  TempFile f("0 1\n0 3\n# comment\n");
  auto src = fpp::open_edge_list(f.path.string());
  const auto edges = fpp::drain(*src);
  CHECK(edges == std::vector<EdgeRecord>{{0, 1}, {0, 3}});
  CHECK(src->skipped() == 0);
}

TEST_CASE("handles tabs, extra spaces, blank lines and CR") {
  TempFile f("10\t20\n  7   9  \r\n\n   # note\n3 4\n");
  auto src = fpp::open_edge_list(f.path.string());
  CHECK(fpp::drain(*src) == std::vector<EdgeRecord>{{10, 20}, {7, 9}, {3, 4}});
}

TEST_CASE("dedup treats pairs as unordered") {
  TempFile f("1 4\n4 1\n");
  ReadOptions opts;
  opts.dedup = true;
  auto src = fpp::open_edge_list(f.path.string(), opts);
  CHECK(fpp::drain(*src).size() == 1);
}

TEST_CASE("drop_self_loops filter") {
  TempFile f("2 2\n1 2\n");
  ReadOptions opts;
  opts.drop_self_loops = true;
  auto src = fpp::open_edge_list(f.path.string(), opts);
  CHECK(fpp::drain(*src) == std::vector<EdgeRecord>{{1, 2}});
}

TEST_CASE("malformed lines: skip-with-count by default, throw in strict mode") {
  TempFile f("1 x\n1 2\n3\n4 5 6\n-1 3\n");
  auto src = fpp::open_edge_list(f.path.string());
  const auto edges = fpp::drain(*src);
  CHECK(edges == std::vector<EdgeRecord>{{1, 2}});
  CHECK(src->skipped() == 4);

  ReadOptions opts;
  opts.strict = true;
  auto strict_src = fpp::open_edge_list(f.path.string(), opts);
  CHECK_THROWS_AS(fpp::drain(*strict_src), fpp::DataError);
}

TEST_CASE("missing file raises IoError") {
  CHECK_THROWS_AS(fpp::open_edge_list("/nonexistent/path/graph.tsv"), fpp::IoError);
}

TEST_CASE("the seven-vertex sample file parses to its eight edges") {
  TempFile f("0 1\n0 3\n1 5\n1 4\n2 0\n2 3\n3 4\n6 4\n");
  auto src = fpp::open_edge_list(f.path.string());
  const auto edges = fpp::drain(*src);
  REQUIRE(edges.size() == 8);
  CHECK(edges.front() == EdgeRecord{0, 1});
  CHECK(edges.back() == EdgeRecord{6, 4});
}

TEST_CASE("gen_complete enumerates ascending pairs") {
  auto src = fpp::gen_complete(3);
  CHECK(fpp::drain(*src) == std::vector<EdgeRecord>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(fpp::drain(*fpp::gen_complete(5)).size() == 10);
  CHECK(fpp::drain(*fpp::gen_complete(50)).size() == 1225);
  CHECK_THROWS_AS(fpp::gen_complete(1), fpp::ConfigError);
}

TEST_CASE("gen_random draws distinct pairs, reproducibly") {
  SUBCASE("saturation yields the complete edge set") {
    auto src = fpp::gen_random(10, 45, 3);
    const auto edges = fpp::drain(*src);
    REQUIRE(edges.size() == 45);
    auto complete = fpp::drain(*fpp::gen_complete(10));
    CHECK(canonical_multiset(edges) == canonical_multiset(complete));
  }
  SUBCASE("zero edges") {
    CHECK(fpp::drain(*fpp::gen_random(1000, 0, 1)).empty());
  }
  SUBCASE("large draw: count, range, distinctness, determinism") {
    const auto a = fpp::drain(*fpp::gen_random(1000, 20000, 42));
    REQUIRE(a.size() == 20000);
    std::set<std::pair<uint64_t, uint64_t>> seen;
    for (const auto& e : a) {
      CHECK(e.u < 1000);
      CHECK(e.v < 1000);
      CHECK(e.u != e.v);
      seen.insert(std::minmax(e.u, e.v));
    }
    CHECK(seen.size() == 20000);

    CHECK(a == fpp::drain(*fpp::gen_random(1000, 20000, 42)));
    CHECK(a != fpp::drain(*fpp::gen_random(1000, 20000, 43)));
  }
  SUBCASE("infeasible request") {
    CHECK_THROWS_AS(fpp::gen_random(10, 46, 0), fpp::ConfigError);
  }
}

TEST_CASE("gen_preferential structure") {
  SUBCASE("base case is the complete seed graph") {
    const auto edges = fpp::drain(*fpp::gen_preferential(6, 5, 77));
    auto complete = fpp::drain(*fpp::gen_complete(6));
    CHECK(canonical_multiset(edges) == canonical_multiset(complete));
  }
  SUBCASE("edge count follows the construction rule") {
    const auto edges = fpp::drain(*fpp::gen_preferential(1000, 5, 1));
    CHECK(edges.size() == 15 + 5 * (1000 - 6));
  }
  SUBCASE("degree distribution is skewed") {
    const auto edges = fpp::drain(*fpp::gen_preferential(10000, 3, 2));
    std::map<uint64_t, uint64_t> degree;
    for (const auto& e : edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    uint64_t max_deg = 0;
    double total = 0;
    for (const auto& [v, d] : degree) {
      max_deg = std::max(max_deg, d);
      total += d;
    }
    const double mean = total / static_cast<double>(degree.size());
    CHECK(static_cast<double>(max_deg) >= 5.0 * mean);
  }
  SUBCASE("deterministic per seed") {
    CHECK(fpp::drain(*fpp::gen_preferential(500, 4, 7)) ==
          fpp::drain(*fpp::gen_preferential(500, 4, 7)));
  }
  SUBCASE("domain checks") {
    CHECK_THROWS_AS(fpp::gen_preferential(5, 5, 0), fpp::ConfigError);
    CHECK_THROWS_AS(fpp::gen_preferential(10, 0, 0), fpp::ConfigError);
  }
}

TEST_CASE("write then read is the identity on edge multisets") {
  const auto edges = fpp::drain(*fpp::gen_random(200, 1500, 8));
  std::ostringstream buf;
  auto src = fpp::make_vector_source(edges);
  fpp::write_edge_list(buf, *src);

  TempFile f(buf.str());
  auto back = fpp::open_edge_list(f.path.string());
  CHECK(fpp::drain(*back) == edges);
}

TEST_SUITE_END();
