#include "tilecoh/arrangement.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "tilecoh/errors.hpp"

namespace tilecoh {

std::size_t Arrangement::sum_L1_alpha() const {
  std::size_t s = 0;
  for (const auto& v : incidence_12) s += v.size();
  return s;
}

std::size_t Arrangement::sum_L0_alpha() const {
  std::size_t s = 0;
  for (const auto& v : incidence_02) s += v.size();
  return s;
}

std::size_t Arrangement::sum_L0_theta() const {
  std::size_t s = 0;
  for (const auto& v : incidence_01) s += v.size();
  return s;
}

std::size_t Arrangement::stabilizer_span_rank() const {
  if (four_tori.empty()) return 0;
  std::size_t n = four_tori.front().ambient();
  std::vector<std::vector<Int>> cols;
  for (const auto& t : four_tori)
    for (std::size_t j = 0; j < t.rank(); ++j) cols.push_back(t.stabilizer().basis.column(j));
  return Sublattice::from_columns(cols, n).rank();
}

namespace {

std::vector<Subtorus> orbit_of(const MatrixGroup& group, const std::vector<Subtorus>& seeds) {
  std::set<Subtorus> seen(seeds.begin(), seeds.end());
  std::vector<Subtorus> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Subtorus> next;
    for (const auto& t : frontier)
      for (const auto& g : group.elements) {
        Subtorus img = act_on_subtorus(g, t);
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Intersect all unordered pairs from `tori`; returns per-pair component lists.
/// expected_rank is the stabilizer rank of generic components; seeing rank
/// expected_rank+1 means the arrangement leaves the framework.
std::vector<std::vector<Subtorus>> pairwise(const std::vector<Subtorus>& tori,
                                            std::size_t expected_rank, std::size_t threads) {
  std::size_t n = tori.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<Subtorus>> results(pairs.size());
  std::vector<std::string> failures(threads);
  auto work = [&](std::size_t tid) {
    try {
      for (std::size_t k = tid; k < pairs.size(); k += threads) {
        auto [i, j] = pairs[k];
        auto comps = intersect_subtori(tori[i], tori[j]);
        for (const auto& c : comps) {
          if (c.rank() == expected_rank + 1)
            throw NonGenericArrangement(
                "two rank-" + std::to_string(tori[i].rank()) +
                " tori intersect in a rank-" + std::to_string(c.rank()) + " component");
        }
        results[k] = std::move(comps);
      }
    } catch (const std::exception& e) {
      failures[tid] = e.what();
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (!f.empty()) throw NonGenericArrangement(f);
  return results;
}

}  // namespace

Arrangement build_arrangement(const MatrixGroup& group, const std::vector<Subtorus>& seeds,
                              std::size_t threads) {
  if (seeds.empty()) throw EmptySeedError("no seed tori");
  for (const auto& s : seeds) {
    if (s.rank() != 4) throw ConfigError("seed torus stabilizer must have rank 4");
  }
  if (threads == 0) threads = 1;
  Arrangement arr;
  arr.four_tori = orbit_of(group, seeds);
  std::sort(arr.four_tori.begin(), arr.four_tori.end());

  // 4-tori pairwise -> 2-tori
  auto res4 = pairwise(arr.four_tori, 2, threads);
  std::set<Subtorus> twos;
  for (const auto& comps : res4)
    for (const auto& c : comps)
      if (c.rank() == 2) twos.insert(c);
  arr.two_tori.assign(twos.begin(), twos.end());

  // 2-tori pairwise -> points
  auto res2 = pairwise(arr.two_tori, 0, threads);
  std::set<Subtorus> pts;
  for (const auto& comps : res2)
    for (const auto& c : comps)
      if (c.rank() == 0) pts.insert(c);
  arr.points.assign(pts.begin(), pts.end());

  arr.incidence_12.resize(arr.L2());
  arr.incidence_02.resize(arr.L2());
  arr.incidence_01.resize(arr.L1());
  for (std::size_t a = 0; a < arr.L2(); ++a)
    for (std::size_t t = 0; t < arr.L1(); ++t)
      if (contains(arr.four_tori[a], arr.two_tori[t])) arr.incidence_12[a].push_back(t);
  for (std::size_t a = 0; a < arr.L2(); ++a)
    for (std::size_t p = 0; p < arr.L0(); ++p)
      if (contains(arr.four_tori[a], arr.points[p])) arr.incidence_02[a].push_back(p);
  for (std::size_t t = 0; t < arr.L1(); ++t)
    for (std::size_t p = 0; p < arr.L0(); ++p)
      if (contains(arr.two_tori[t], arr.points[p])) arr.incidence_01[t].push_back(p);

  if (arr.stabilizer_span_rank() < 6)
    arr.warnings.push_back(
        "stabilizers of the 4-tori span rank " +
        std::to_string(arr.stabilizer_span_rank()) +
        " < 6; the closed-form H_0, H_1 of the arrangement do not apply");
  return arr;
}

}  // namespace tilecoh
