#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "tilecoh/subtorus.hpp"

namespace tilecoh {

/// The arrangement A of singular tori: the 4-tori (orbit of the seeds), the 2-tori they
/// intersect in, the points the 2-tori intersect in, and the incidence index sets.
/// All lists are canonically sorted and deduplicated; indices refer to list positions.
struct Arrangement {
  std::vector<Subtorus> four_tori;  // I2
  std::vector<Subtorus> two_tori;   // I1
  std::vector<Subtorus> points;     // I0

  std::vector<std::vector<std::size_t>> incidence_12;  // per alpha: sorted I1^alpha
  std::vector<std::vector<std::size_t>> incidence_02;  // per alpha: sorted I0^alpha
  std::vector<std::vector<std::size_t>> incidence_01;  // per theta: sorted I0^theta

  std::vector<std::string> warnings;

  std::size_t L2() const { return four_tori.size(); }
  std::size_t L1() const { return two_tori.size(); }
  std::size_t L0() const { return points.size(); }
  std::size_t L1_alpha(std::size_t a) const { return incidence_12[a].size(); }
  std::size_t L0_alpha(std::size_t a) const { return incidence_02[a].size(); }
  std::size_t L0_theta(std::size_t t) const { return incidence_01[t].size(); }
  std::size_t sum_L1_alpha() const;
  std::size_t sum_L0_alpha() const;
  std::size_t sum_L0_theta() const;

  /// rank of the sum of all 4-torus stabilizers (6 required by the homology formulas)
  std::size_t stabilizer_span_rank() const;
};

/// Expand the seed orbit under the group, intersect pairwise (4-tori -> 2-tori ->
/// points), and assemble the incidence maps. `threads` >= 1 parallelizes the pairwise
/// intersections; the result is deterministic regardless of thread count.
Arrangement build_arrangement(const MatrixGroup& group, const std::vector<Subtorus>& seeds,
                              std::size_t threads = 1);

}  // namespace tilecoh
