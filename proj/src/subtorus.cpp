#include "tilecoh/subtorus.hpp"

#include <algorithm>

namespace tilecoh {

namespace {

std::vector<std::size_t> pivot_rows_of(const Sublattice& s) {
  std::vector<std::size_t> out(s.rank());
  for (std::size_t j = 0; j < s.rank(); ++j) {
    std::size_t r = 0;
    while (s.basis(r, j) == 0) ++r;
    out[j] = r;
  }
  return out;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::vector<std::vector<Rat>> rat_columns(const IntMatrix& m) {
  std::vector<std::vector<Rat>> cols(m.cols(), std::vector<Rat>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) cols[c][r] = m(r, c);
  return cols;
}

/// z = c - B y with z vanishing on the pivot rows of B (projection along span(B)
/// onto the complementary coordinates).
std::vector<Rat> project_along(const Sublattice& stab, const std::vector<Rat>& c) {
  std::size_t n = stab.ambient_rank;
  std::size_t k = stab.rank();
  if (k == 0) return c;
  auto piv = pivot_rows_of(stab);
  std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
  std::vector<Rat> rhs(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) sub[j][i] = stab.basis(piv[i], j);
    rhs[j] = c[piv[j]];
  }
  auto y = solve_rational(sub, rhs);
  // pivot submatrix is invertible by the echelon structure
  std::vector<Rat> z(n);
  for (std::size_t r = 0; r < n; ++r) {
    Rat acc = c[r];
    for (std::size_t j = 0; j < k; ++j)
      if (stab.basis(r, j) != 0) acc -= Rat(stab.basis(r, j)) * (*y)[j];
    z[r] = acc;
  }
  return z;
}

Int common_denominator(const std::vector<std::vector<Rat>>& vs) {
  Int den = 1;
  for (const auto& v : vs)
    for (const auto& x : v) den = lcm_int(den, boost::multiprecision::denominator(x));
  return den;
}

/// Generators of the induced lattice pi(Z^n) in the complementary coordinates,
/// as full n-vectors (supported off the pivot rows).
std::vector<std::vector<Rat>> induced_lattice_gens(const Sublattice& stab) {
  std::size_t n = stab.ambient_rank;
  std::vector<std::vector<Rat>> gens;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Rat> e(n, Rat(0));
    e[p] = 1;
    gens.push_back(project_along(stab, e));
  }
  return gens;
}

/// HNF basis of the lattice spanned by rational generators (columns), returned as
/// rational columns.
std::vector<std::vector<Rat>> rational_lattice_basis(const std::vector<std::vector<Rat>>& gens,
                                                     std::size_t n) {
  Int den = common_denominator(gens);
  std::vector<std::vector<Int>> icols;
  for (const auto& g : gens) {
    std::vector<Int> col(n);
    for (std::size_t r = 0; r < n; ++r)
      col[r] = boost::multiprecision::numerator(g[r]) *
               (den / boost::multiprecision::denominator(g[r]));
    icols.push_back(col);
  }
  Sublattice lat = Sublattice::from_columns(icols, n);
  std::vector<std::vector<Rat>> out;
  for (std::size_t j = 0; j < lat.rank(); ++j) {
    std::vector<Rat> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = Rat(lat.basis(r, j), den);
    out.push_back(col);
  }
  return out;
}

Rat frac_part(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  Int q = floor_div(num, den);
  return x - Rat(q);
}

}  // namespace

std::vector<Rat> canonical_offset(const Sublattice& stab, const std::vector<Rat>& offset) {
  std::size_t n = stab.ambient_rank;
  if (offset.size() != n) throw DimensionMismatch("offset length");
  std::vector<Rat> z = project_along(stab, offset);
  bool zero = std::all_of(z.begin(), z.end(), [](const Rat& x) { return x == 0; });
  if (zero) return std::vector<Rat>(n, Rat(0));
  auto F = rational_lattice_basis(induced_lattice_gens(stab), n);
  auto t = solve_rational(F, z);
  if (!t) throw Error("offset outside the Q-span of the induced lattice");
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t j = 0; j < F.size(); ++j) {
    Rat tf = frac_part((*t)[j]);
    if (tf == 0) continue;
    for (std::size_t r = 0; r < n; ++r) out[r] += F[j][r] * tf;
  }
  return out;
}

std::optional<std::vector<Int>> lattice_shift(const Sublattice& stab,
                                              const std::vector<Rat>& c) {
  std::size_t n = stab.ambient_rank;
  std::vector<Rat> z = project_along(stab, c);
  if (std::all_of(z.begin(), z.end(), [](const Rat& x) { return x == 0; }))
    return std::vector<Int>(n, Int(0));
  auto gens = induced_lattice_gens(stab);
  auto all = gens;
  all.push_back(z);
  Int den = common_denominator(all);
  std::vector<std::vector<Int>> icols;
  for (const auto& g : gens) {
    std::vector<Int> col(n);
    for (std::size_t r = 0; r < n; ++r)
      col[r] = boost::multiprecision::numerator(g[r]) *
               (den / boost::multiprecision::denominator(g[r]));
    icols.push_back(col);
  }
  std::vector<Int> zt(n);
  for (std::size_t r = 0; r < n; ++r)
    zt[r] = boost::multiprecision::numerator(z[r]) *
            (den / boost::multiprecision::denominator(z[r]));
  auto sol = solve_integer(icols, zt, n);
  if (!sol) return std::nullopt;
  return sol;  // gamma = sum sol[p] * e_p
}

Subtorus::Subtorus(Sublattice stabilizer, std::vector<Rat> offset) {
  if (offset.size() != stabilizer.ambient_rank) throw DimensionMismatch("offset length");
  stab_ = saturate(Sublattice::from_columns(stabilizer.basis.columns(),
                                            stabilizer.ambient_rank));
  off_ = canonical_offset(stab_, offset);
}

bool Subtorus::operator<(const Subtorus& o) const {
  if (stab_.rank() != o.stab_.rank()) return stab_.rank() < o.stab_.rank();
  for (std::size_t c = 0; c < stab_.rank(); ++c)
    for (std::size_t r = 0; r < ambient(); ++r) {
      if (stab_.basis(r, c) != o.stab_.basis(r, c))
        return stab_.basis(r, c) < o.stab_.basis(r, c);
    }
  for (std::size_t r = 0; r < ambient(); ++r)
    if (off_[r] != o.off_[r]) return off_[r] < o.off_[r];
  return false;
}

Subtorus canonicalize(const Subtorus& t) {
  return Subtorus(t.stabilizer(), t.offset());
}

bool contains(const Subtorus& big, const Subtorus& small) {
  if (small.rank() > big.rank()) throw DimensionMismatch("contains: rank order");
  for (std::size_t j = 0; j < small.rank(); ++j)
    if (!member(big.stabilizer(), small.stabilizer().basis.column(j))) return false;
  std::size_t n = big.ambient();
  std::vector<Rat> delta(n);
  for (std::size_t r = 0; r < n; ++r) delta[r] = small.offset()[r] - big.offset()[r];
  return lattice_shift(big.stabilizer(), delta).has_value();
}

std::vector<Subtorus> intersect_subtori(const Subtorus& t1, const Subtorus& t2) {
  std::size_t n = t1.ambient();
  if (n != t2.ambient()) throw DimensionMismatch("intersect ambient rank");
  if (t1 == t2) return {t1};
  const Sublattice& g1 = t1.stabilizer();
  const Sublattice& g2 = t2.stabilizer();
  Sublattice w = lattice_sum(g1, g2);  // Gamma1 + Gamma2
  Sublattice nn = saturate(w);         // Z^n cap (V1 + V2)
  std::vector<Rat> delta(n);
  for (std::size_t r = 0; r < n; ++r) delta[r] = t1.offset()[r] - t2.offset()[r];
  auto gamma0 = lattice_shift(nn, delta);
  if (!gamma0) return {};
  // x0 = c1 - w1 where delta - gamma0 = w1 + w2, wi in span(Gi)
  std::vector<Rat> wvec(n);
  for (std::size_t r = 0; r < n; ++r) wvec[r] = delta[r] - Rat((*gamma0)[r]);
  std::vector<std::vector<Rat>> cols = rat_columns(g1.basis);
  auto cols2 = rat_columns(g2.basis);
  cols.insert(cols.end(), cols2.begin(), cols2.end());
  auto ab = solve_rational(cols, wvec);
  if (!ab) throw Error("intersect: span decomposition failed");
  std::vector<Rat> x0(n);
  for (std::size_t r = 0; r < n; ++r) {
    Rat w1 = 0;
    for (std::size_t j = 0; j < g1.rank(); ++j)
      if (g1.basis(r, j) != 0) w1 += Rat(g1.basis(r, j)) * (*ab)[j];
    x0[r] = t1.offset()[r] - w1;
  }
  Sublattice vint = lattice_intersect(g1, g2);
  // coset representatives of N / (Gamma1 + Gamma2); the quotient is finite since
  // both have rank = dim(V1+V2)
  std::size_t k = nn.rank();
  std::vector<std::vector<Int>> wc;
  for (std::size_t j = 0; j < w.rank(); ++j) {
    auto col = w.basis.column(j);
    std::vector<Rat> rc = to_rat(col);
    auto y = solve_rational(rat_columns(nn.basis), rc);
    std::vector<Int> yi(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (boost::multiprecision::denominator((*y)[i]) != 1)
        throw Error("intersect: sum lattice not inside its saturation");
      yi[i] = boost::multiprecision::numerator((*y)[i]);
    }
    wc.push_back(yi);
  }
  Sublattice cl = Sublattice::from_columns(wc, k);
  if (cl.rank() != k) throw Error("intersect: quotient not finite");
  // box transversal from the HNF pivots (pivot rows are 0..k-1 in order)
  std::vector<Int> bounds(k);
  for (std::size_t j = 0; j < k; ++j) bounds[j] = cl.basis(j, j);
  std::vector<Subtorus> comps;
  std::vector<Int> t(k, Int(0));
  for (;;) {
    // component offset: x0 + u1(N * t)
    std::vector<Rat> nv(n, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
      if (t[j] != 0)
        for (std::size_t r = 0; r < n; ++r)
          if (nn.basis(r, j) != 0) nv[r] += Rat(nn.basis(r, j) * t[j]);
    auto uu = solve_rational(cols, nv);
    if (!uu) throw Error("intersect: coset decomposition failed");
    std::vector<Rat> off(n);
    for (std::size_t r = 0; r < n; ++r) {
      Rat u1 = 0;
      for (std::size_t j = 0; j < g1.rank(); ++j)
        if (g1.basis(r, j) != 0) u1 += Rat(g1.basis(r, j)) * (*uu)[j];
      off[r] = x0[r] + u1;
    }
    Subtorus comp(vint, off);
    if (std::find(comps.begin(), comps.end(), comp) == comps.end())
      comps.push_back(std::move(comp));
    // advance the mixed-radix counter
    std::size_t j = 0;
    while (j < k) {
      ++t[j];
      if (t[j] < bounds[j]) break;
      t[j] = 0;
      ++j;
    }
    if (j == k) break;
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

Subtorus act_on_subtorus(const IntMatrix& g, const Subtorus& t) {
  std::size_t n = t.ambient();
  if (g.rows() != n || g.cols() != n) throw DimensionMismatch("group element shape");
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 0; j < t.rank(); ++j) {
    std::vector<Int> v(n, Int(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (g(r, k) != 0) v[r] += g(r, k) * t.stabilizer().basis(k, j);
    cols.push_back(v);
  }
  std::vector<Rat> off(n, Rat(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      if (g(r, k) != 0) off[r] += Rat(g(r, k)) * t.offset()[k];
  return Subtorus(Sublattice::from_columns(cols, n), off);
}

}  // namespace tilecoh
