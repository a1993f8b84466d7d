#include "tilecoh/wedge.hpp"

#include <algorithm>
#include <map>

namespace tilecoh {

WedgeIndex::WedgeIndex(std::size_t n, std::size_t degree) : n_(n), m_(degree) {
  if (degree > n) throw DimensionMismatch("wedge degree exceeds ambient rank");
  std::vector<std::size_t> idx(m_);
  for (std::size_t i = 0; i < m_; ++i) idx[i] = i;
  for (;;) {
    subsets_.push_back(idx);
    // next lex m-subset
    std::size_t i = m_;
    while (i > 0) {
      --i;
      if (idx[i] != i + n_ - m_) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n_ - m_) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < m_; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t WedgeIndex::position(const std::vector<std::size_t>& subset) const {
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), subset);
  if (it == subsets_.end() || *it != subset) throw Error("wedge subset not found");
  return static_cast<std::size_t>(it - subsets_.begin());
}

std::vector<Int> wedge_vectors(const std::vector<std::vector<Int>>& vs, std::size_t n) {
  std::size_t m = vs.size();
  if (m > n) throw DimensionMismatch("more vectors than ambient rank");
  for (const auto& v : vs)
    if (v.size() != n) throw DimensionMismatch("wedge vector length");
  WedgeIndex wi(n, m);
  std::vector<Int> out(wi.size());
  for (std::size_t pos = 0; pos < wi.size(); ++pos) {
    const auto& rows = wi.subset(pos);
    IntMatrix minor(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) minor(i, j) = vs[j][rows[i]];
    out[pos] = minor.determinant();
  }
  return out;
}

Sublattice wedge_power(const Sublattice& s, std::size_t m) {
  std::size_t k = s.rank();
  if (m < 1 || m > k) throw DimensionMismatch("wedge_power degree out of range");
  WedgeIndex pick(k, m);
  std::vector<std::vector<Int>> gens;
  for (std::size_t pos = 0; pos < pick.size(); ++pos) {
    std::vector<std::vector<Int>> vs;
    for (std::size_t j : pick.subset(pos)) vs.push_back(s.basis.column(j));
    gens.push_back(wedge_vectors(vs, s.ambient_rank));
  }
  WedgeIndex amb(s.ambient_rank, m);
  return Sublattice::from_columns(gens, amb.size());
}

MatrixGroup group_closure(const std::vector<IntMatrix>& generators, std::size_t bound) {
  for (const auto& g : generators) {
    Int d = g.determinant();
    if (d != 1 && d != -1) throw GroupClosureError("generator is not unimodular");
  }
  auto key = [](const IntMatrix& m) {
    std::vector<Int> k;
    k.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) k.push_back(m(r, c));
    return k;
  };
  std::size_t n = generators.empty() ? 6 : generators.front().rows();
  IntMatrix eye = IntMatrix::identity(n);
  std::map<std::vector<Int>, std::size_t> seen;
  MatrixGroup grp;
  grp.elements.push_back(eye);
  seen[key(eye)] = 0;
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const auto& g : generators) {
        IntMatrix p = grp.elements[idx] * g;
        auto k = key(p);
        if (seen.find(k) == seen.end()) {
          if (grp.elements.size() >= bound)
            throw GroupClosureError("group closure exceeds bound");
          seen[k] = grp.elements.size();
          grp.elements.push_back(std::move(p));
          next.push_back(grp.elements.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  return grp;
}

}  // namespace tilecoh
