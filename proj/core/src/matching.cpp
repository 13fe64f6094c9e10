#include "fpppart/matching.hpp"

#include <stdexcept>

namespace fpp {

namespace {

constexpr uint32_t kUnmatched = 0xffffffffu;

struct Frame {
  uint32_t line;
  uint32_t next;   // next adjacency slot to scan
  uint32_t point;  // point currently being explored
};

}  // namespace

LinePointMatching perfect_matching(const ProjPlane& plane) {
  const uint32_t n = plane.n();
  const auto& adj = plane.lines();

  std::vector<uint32_t> match_point(n, kUnmatched);  // point -> line
  std::vector<uint32_t> match_line(n, kUnmatched);   // line -> point
  std::vector<uint32_t> visited(n, kUnmatched);      // stamp per start line

  // Greedy pass: most lines match on their first free point.
  for (uint32_t line = 0; line < n; ++line) {
    for (uint32_t pt : adj[line]) {
      if (match_point[pt] == kUnmatched) {
        match_point[pt] = line;
        match_line[line] = pt;
        break;
      }
    }
  }

  // Kuhn augmenting paths, iterative to keep the stack flat on big planes.
  std::vector<Frame> stack;
  for (uint32_t start = 0; start < n; ++start) {
    if (match_line[start] != kUnmatched) continue;
    stack.clear();
    stack.push_back({start, 0, kUnmatched});
    bool augmented = false;
    while (!stack.empty() && !augmented) {
      Frame& f = stack.back();
      if (f.next >= adj[f.line].size()) {
        stack.pop_back();
        continue;
      }
      const uint32_t pt = adj[f.line][f.next++];
      if (visited[pt] == start) continue;
      visited[pt] = start;
      f.point = pt;
      if (match_point[pt] == kUnmatched) {
        // Free point: flip matches along the whole path.
        for (const Frame& g : stack) {
          match_point[g.point] = g.line;
          match_line[g.line] = g.point;
        }
        augmented = true;
      } else {
        stack.push_back({match_point[pt], 0, kUnmatched});
      }
    }
    if (!augmented) {
      // Cannot happen: the incidence graph is regular with equal sides.
      throw std::logic_error("incidence graph has no perfect matching");
    }
  }

  LinePointMatching m;
  m.phi = std::move(match_line);
  return m;
}

}  // namespace fpp
