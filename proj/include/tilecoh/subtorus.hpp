#pragma once
#include <optional>
#include <vector>

#include "tilecoh/exactlin.hpp"
#include "tilecoh/wedge.hpp"

namespace tilecoh {

/// Rational subtorus of T^6 = R^6/Z^6: a primitive stabilizer sublattice plus an offset
/// class in Q^6/(Z^6 + Q-span(stabilizer)). Construction canonicalizes, so equality is
/// bitwise on (stabilizer HNF, reduced offset).
class Subtorus {
 public:
  Subtorus() = default;
  /// Canonicalizing constructor: saturates the stabilizer, reduces the offset.
  Subtorus(Sublattice stabilizer, std::vector<Rat> offset);

  const Sublattice& stabilizer() const { return stab_; }
  const std::vector<Rat>& offset() const { return off_; }
  std::size_t rank() const { return stab_.rank(); }
  std::size_t ambient() const { return stab_.ambient_rank; }

  bool operator==(const Subtorus& o) const { return stab_ == o.stab_ && off_ == o.off_; }
  bool operator<(const Subtorus& o) const;  // total order for deterministic lists

 private:
  Sublattice stab_;
  std::vector<Rat> off_;
};

/// Reduce an offset to the distinguished representative of its class in
/// Q^n/(Z^n + Q-span(stab)): kill the stabilizer-span component through the pivot rows,
/// then reduce the remainder modulo the induced integral lattice into the [0,1) cell of
/// its HNF basis. stab must be saturated.
std::vector<Rat> canonical_offset(const Sublattice& stab, const std::vector<Rat>& offset);

Subtorus canonicalize(const Subtorus& t);

/// Is c in Z^n + Q-span(stab)? If so, also produce an integer gamma with
/// c - gamma in the span.
std::optional<std::vector<Int>> lattice_shift(const Sublattice& stab,
                                              const std::vector<Rat>& c);

/// small subset of big (as subsets of the torus)?
bool contains(const Subtorus& big, const Subtorus& small);

/// Connected components of T1 cap T2. All components share the stabilizer
/// saturate(G1 cap G2) and differ only in offset class; empty iff the offset difference
/// is not reachable modulo Q-span(G1) + Q-span(G2) + Z^n.
std::vector<Subtorus> intersect_subtori(const Subtorus& t1, const Subtorus& t2);

/// g . T : stabilizer mapped (and re-HNF'd), offset mapped and re-canonicalized.
Subtorus act_on_subtorus(const IntMatrix& g, const Subtorus& t);

}  // namespace tilecoh
