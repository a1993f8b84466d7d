#pragma once
#include <cstddef>
#include <vector>

#include "tilecoh/exactlin.hpp"

namespace tilecoh {

/// Lexicographic coordinates on Lambda_m(Z^n): position <-> sorted m-subset of {0..n-1}.
/// The same ordering is used everywhere (d1 blocks, S_k lattices, Eq.-style generators).
class WedgeIndex {
 public:
  WedgeIndex(std::size_t n, std::size_t degree);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return m_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t pos) const { return subsets_[pos]; }
  std::size_t position(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t n_, m_;
  std::vector<std::vector<std::size_t>> subsets_;
};

/// Wedge product of m integer n-vectors in WedgeIndex(n, m) coordinates.
/// Alternating and multilinear; coordinates are the m x m minors.
std::vector<Int> wedge_vectors(const std::vector<std::vector<Int>>& vs, std::size_t n = 6);

/// Lambda_m(S) as a sublattice of Z^C(n,m): generated by wedges of all m-subsets of
/// the basis columns. Independent of the chosen basis of S.
Sublattice wedge_power(const Sublattice& s, std::size_t m);

/// Finite group of unimodular integer matrices, closed under product (hence inverse).
struct MatrixGroup {
  std::vector<IntMatrix> elements;  // contains the identity
  std::size_t order() const { return elements.size(); }
};

/// Breadth-first closure of the generators. Throws GroupClosureError if a generator is
/// not unimodular or the closure exceeds `bound`.
MatrixGroup group_closure(const std::vector<IntMatrix>& generators, std::size_t bound);

}  // namespace tilecoh
