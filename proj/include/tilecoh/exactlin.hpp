#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilecoh/matrix.hpp"

namespace tilecoh {

/// Finitely generated abelian group: Z^free_rank (+) Z_d1 (+) ... with d1 | d2 | ...,
/// every stored factor >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const AbelianGroup& o) const = default;
  bool is_free() const { return invariant_factors.empty(); }
  std::size_t p_torsion_rank(const Int& p) const;
  std::string to_string() const;  // e.g. "Z^20 + Z_2"
};

/// Integer sublattice of Z^n, basis columns in canonical column HNF.
/// Canonical form makes equality bitwise.
struct Sublattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;  // n x k, k independent columns, HNF

  static Sublattice from_columns(std::vector<std::vector<Int>> cols, std::size_t ambient);
  static Sublattice zero(std::size_t ambient);
  static Sublattice full(std::size_t ambient);

  std::size_t rank() const { return basis.cols(); }
  bool operator==(const Sublattice& o) const = default;
};

struct HnfResult {
  IntMatrix h;  // M*u = h, column HNF (zero columns trailing)
  IntMatrix u;  // unimodular
};

struct SnfResult {
  IntMatrix d;  // u*M*v = d, diagonal, d1 | d2 | ..., entries >= 0
  IntMatrix u;
  IntMatrix v;
};

/// Column-style Hermite normal form. Pivot rows strictly increase, each pivot is the
/// topmost nonzero entry of its column and positive, entries left of a pivot in its row
/// reduced into [0, pivot). Zero columns are moved to the end.
HnfResult hnf(const IntMatrix& m);

/// Smith normal form with transforms, deterministic smallest-pivot strategy.
SnfResult snf(const IntMatrix& m);

/// Diagonal of the SNF only (same pivoting, no transform bookkeeping).
std::vector<Int> snf_diagonal(IntMatrix m);

/// Z^rows / im(M)
AbelianGroup cokernel(const IntMatrix& m);

/// Saturated integer kernel lattice {x : M x = 0}.
Sublattice kernel(const IntMatrix& m);

/// (Q-span of S) cap Z^n
Sublattice saturate(const Sublattice& s);

Sublattice lattice_sum(const Sublattice& s, const Sublattice& t);
Sublattice lattice_intersect(const Sublattice& s, const Sublattice& t);

/// rank over Q
std::size_t rank(const IntMatrix& m);

/// rank of M mod p; p must be prime
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

bool is_prime(std::uint64_t p);

/// v an integer combination of basis columns?
bool member(const Sublattice& s, const std::vector<Int>& v);

// --- solving helpers used across modules ---

/// Solve A x = b over Q; A given by columns. Empty optional if inconsistent.
std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Rat>>& cols,
                                               const std::vector<Rat>& b);

/// Solve A x = b over Z; A given by integer columns.
std::optional<std::vector<Int>> solve_integer(const std::vector<std::vector<Int>>& cols,
                                              const std::vector<Int>& b, std::size_t nrows);

}  // namespace tilecoh
