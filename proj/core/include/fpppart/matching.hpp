#pragma once

#include <cstdint>
#include <vector>

#include "fpppart/projective_plane.hpp"

namespace fpp {

// Line-to-point bijection: phi[i] is the point matched to line i, with
// phi[i] always lying on line i.
struct LinePointMatching {
  std::vector<uint32_t> phi;
};

// Perfect matching in the line/point incidence graph via Kuhn's augmenting
// paths. The incidence graph is (q+1)-regular with equal sides, so a perfect
// matching always exists. Lines are scanned ascending and neighbors
// ascending, which makes the result deterministic.
LinePointMatching perfect_matching(const ProjPlane& plane);

}  // namespace fpp
