#include "tilecoh/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace tilecoh {

std::size_t AbelianGroup::p_torsion_rank(const Int& p) const {
  std::size_t n = 0;
  for (const auto& d : invariant_factors)
    if (d % p == 0) ++n;
  return n;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  if (free_rank == 0 && invariant_factors.empty()) return "0";
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : invariant_factors) {
    if (!first) os << " + ";
    os << "Z_" << d;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// HNF.  Columns are the working objects; all transformations are unimodular
// column operations applied simultaneously to U.

namespace {

struct ColWork {
  std::vector<std::vector<Int>> cols;  // matrix columns
  std::vector<std::vector<Int>> ucols; // transform columns (may be empty)
  std::size_t nrows;
  bool track_u;

  void combine(std::size_t p, std::size_t c, std::size_t row) {
    // zero out cols[c][row] against pivot column p, keeping the pair unimodular
    Int a = cols[p][row], b = cols[c][row];
    if (b == 0) return;
    if (a == 0) {
      cols[p].swap(cols[c]);
      if (track_u) ucols[p].swap(ucols[c]);
      return;
    }
    Int s, t;
    Int g = xgcd(a, b, s, t);
    Int ad = a / g, bd = b / g;
    apply(p, c, s, t, -bd, ad);
  }

  // (colp, colc) <- (s*colp + t*colc, u*colp + v*colc); s*v - t*u = +-1
  void apply(std::size_t p, std::size_t c, const Int& s, const Int& t, const Int& u,
             const Int& v) {
    auto& cp = cols[p];
    auto& cc = cols[c];
    for (std::size_t r = 0; r < nrows; ++r) {
      Int np = s * cp[r] + t * cc[r];
      Int nc = u * cp[r] + v * cc[r];
      cp[r] = std::move(np);
      cc[r] = std::move(nc);
    }
    if (track_u) {
      auto& up = ucols[p];
      auto& uc = ucols[c];
      for (std::size_t r = 0; r < up.size(); ++r) {
        Int np = s * up[r] + t * uc[r];
        Int nc = u * up[r] + v * uc[r];
        up[r] = std::move(np);
        uc[r] = std::move(nc);
      }
    }
  }

  void negate(std::size_t c) {
    for (auto& x : cols[c]) x = -x;
    if (track_u)
      for (auto& x : ucols[c]) x = -x;
  }

  void addmul(std::size_t dst, std::size_t src, const Int& q) {
    // col_dst += q * col_src
    for (std::size_t r = 0; r < nrows; ++r) cols[dst][r] += q * cols[src][r];
    if (track_u)
      for (std::size_t r = 0; r < ucols[dst].size(); ++r)
        ucols[dst][r] += q * ucols[src][r];
  }
};

}  // namespace

static void hnf_cols_inplace(ColWork& w, std::vector<std::size_t>& order,
                             std::vector<std::size_t>& pivot_rows) {
  std::size_t n = w.cols.size();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  order.clear();
  pivot_rows.clear();
  for (std::size_t row = 0; row < w.nrows && !active.empty(); ++row) {
    // gather active columns with a nonzero at this row
    std::size_t pi = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (w.cols[active[k]][row] != 0) {
        pi = k;
        break;
      }
    }
    if (pi == active.size()) continue;
    std::size_t p = active[pi];
    for (std::size_t k = pi + 1; k < active.size(); ++k) {
      if (w.cols[active[k]][row] != 0) w.combine(p, active[k], row);
    }
    if (w.cols[p][row] < 0) w.negate(p);
    order.push_back(p);
    pivot_rows.push_back(row);
    active.erase(active.begin() + pi);
  }
  // reduce entries left of each pivot into [0, pivot)
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::size_t r = pivot_rows[j];
    const Int& pv = w.cols[order[j]][r];
    for (std::size_t j2 = 0; j2 < j; ++j2) {
      Int q = floor_div(w.cols[order[j2]][r], pv);
      if (q != 0) w.addmul(order[j2], order[j], -q);
    }
  }
  // trailing zero columns keep their original relative order
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
}

HnfResult hnf(const IntMatrix& m) {
  ColWork w;
  w.cols = m.columns();
  w.nrows = m.rows();
  w.track_u = true;
  w.ucols = IntMatrix::identity(m.cols()).columns();
  std::vector<std::size_t> order, pivot_rows;
  hnf_cols_inplace(w, order, pivot_rows);
  std::vector<std::vector<Int>> hc, uc;
  for (std::size_t i : order) {
    hc.push_back(w.cols[i]);
    uc.push_back(w.ucols[i]);
  }
  return HnfResult{IntMatrix::from_columns(hc, m.rows()),
                   IntMatrix::from_columns(uc, m.cols())};
}

static std::vector<std::vector<Int>> hnf_basis_columns(const std::vector<std::vector<Int>>& cols,
                                                       std::size_t nrows) {
  ColWork w;
  w.cols = cols;
  w.nrows = nrows;
  w.track_u = false;
  std::vector<std::size_t> order, pivot_rows;
  hnf_cols_inplace(w, order, pivot_rows);
  std::vector<std::vector<Int>> out;
  for (std::size_t j = 0; j < pivot_rows.size(); ++j) out.push_back(w.cols[order[j]]);
  return out;
}

std::size_t rank(const IntMatrix& m) {
  return hnf_basis_columns(m.columns(), m.rows()).size();
}

// ---------------------------------------------------------------------------
// Sublattice

Sublattice Sublattice::from_columns(std::vector<std::vector<Int>> cols, std::size_t ambient) {
  for (const auto& c : cols)
    if (c.size() != ambient) throw DimensionMismatch("sublattice column length");
  auto h = hnf_basis_columns(cols, ambient);
  Sublattice s;
  s.ambient_rank = ambient;
  s.basis = IntMatrix::from_columns(h, ambient);
  return s;
}

Sublattice Sublattice::zero(std::size_t ambient) {
  Sublattice s;
  s.ambient_rank = ambient;
  s.basis = IntMatrix(ambient, 0);
  return s;
}

Sublattice Sublattice::full(std::size_t ambient) {
  Sublattice s;
  s.ambient_rank = ambient;
  s.basis = IntMatrix::identity(ambient);
  return s;
}

// ---------------------------------------------------------------------------
// SNF

namespace {

struct SnfWork {
  IntMatrix a, u, v;
  bool track;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    if (track)
      for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    if (track)
      for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
  }
  void row_addmul(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < n; ++c)
      if (a(src, c) != 0) a(dst, c) += q * a(src, c);
    if (track)
      for (std::size_t c = 0; c < m; ++c)
        if (u(src, c) != 0) u(dst, c) += q * u(src, c);
  }
  void col_addmul(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (a(r, src) != 0) a(r, dst) += q * a(r, src);
    if (track)
      for (std::size_t r = 0; r < n; ++r)
        if (v(r, src) != 0) v(r, dst) += q * v(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
    if (track)
      for (std::size_t c = 0; c < m; ++c) u(i, c) = -u(i, c);
  }
};

// smallest nonzero |entry| in the trailing submatrix, first hit in row-major order
bool find_pivot(const IntMatrix& a, std::size_t top, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = top; i < a.rows(); ++i) {
    for (std::size_t j = top; j < a.cols(); ++j) {
      const Int& x = a(i, j);
      if (x == 0) continue;
      Int ax = x < 0 ? -x : x;
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

void snf_run(SnfWork& w, std::vector<Int>& diag) {
  std::size_t top = 0;
  std::size_t lim = std::min(w.m, w.n);
  while (top < lim) {
    std::size_t pi, pj;
    if (!find_pivot(w.a, top, pi, pj)) break;
    w.swap_rows(top, pi);
    w.swap_cols(top, pj);
    for (;;) {
      bool dirty = false;
      // clear column
      for (std::size_t i = top + 1; i < w.m; ++i) {
        if (w.a(i, top) == 0) continue;
        Int q = floor_div(w.a(i, top), w.a(top, top));
        if (q != 0) w.row_addmul(i, top, -q);
        if (w.a(i, top) != 0) {
          // remainder is smaller than pivot; promote it
          w.swap_rows(top, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // clear row
      for (std::size_t j = top + 1; j < w.n; ++j) {
        if (w.a(top, j) == 0) continue;
        Int q = floor_div(w.a(top, j), w.a(top, top));
        if (q != 0) w.col_addmul(j, top, -q);
        if (w.a(top, j) != 0) {
          w.swap_cols(top, j);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (w.a(top, top) < 0) w.negate_row(top);
    ++top;
  }
  // divisibility chain
  diag.assign(lim, 0);
  for (std::size_t i = 0; i < top; ++i) diag[i] = w.a(i, i);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < top; ++i) {
      if (diag[i + 1] % diag[i] != 0) {
        // fold a_{i+1} into row i: standard gcd/lcm step realised by ops on w
        // col i+1 += col i ; then re-eliminate the 2x2 block
        w.col_addmul(i, i + 1, 1);
        // now a(i,i)=d_i, a(i,i+1)=d_{i+1}? no: we added col i+1 into col i:
        // a(i,i) = d_i, a(i+1,i) = d_{i+1}
        // run a mini-elimination on the block
        for (;;) {
          Int di = w.a(i, i), dj = w.a(i + 1, i);
          if (dj == 0) break;
          Int q = floor_div(dj, di);
          if (q != 0) w.row_addmul(i + 1, i, -q);
          if (w.a(i + 1, i) != 0) w.swap_rows(i, i + 1);
        }
        // clear fill created at (i, i+1) / (i+1, i+1) stays; re-clear row i
        for (;;) {
          Int di = w.a(i, i), dj = w.a(i, i + 1);
          if (dj == 0) break;
          Int q = floor_div(dj, di);
          if (q != 0) w.col_addmul(i + 1, i, -q);
          if (w.a(i, i + 1) != 0) w.swap_cols(i, i + 1);
        }
        // the block may have become non-diagonal in the (i+1,i+1) slot only
        if (w.a(i, i) < 0) w.negate_row(i);
        if (w.a(i + 1, i + 1) < 0) w.negate_row(i + 1);
        diag[i] = w.a(i, i);
        diag[i + 1] = w.a(i + 1, i + 1);
        changed = true;
      }
    }
  }
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfWork w;
  w.a = m;
  w.m = m.rows();
  w.n = m.cols();
  w.track = true;
  w.u = IntMatrix::identity(w.m);
  w.v = IntMatrix::identity(w.n);
  std::vector<Int> diag;
  snf_run(w, diag);
  IntMatrix d(w.m, w.n);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return SnfResult{d, w.u, w.v};
}

std::vector<Int> snf_diagonal(IntMatrix m) {
  SnfWork w;
  w.a = std::move(m);
  w.m = w.a.rows();
  w.n = w.a.cols();
  w.track = false;
  std::vector<Int> diag;
  snf_run(w, diag);
  return diag;
}

AbelianGroup cokernel(const IntMatrix& m) {
  auto diag = snf_diagonal(m);
  AbelianGroup g;
  std::size_t r = 0;
  for (const auto& d : diag) {
    if (d != 0) {
      ++r;
      if (d > 1) g.invariant_factors.push_back(d);
    }
  }
  g.free_rank = m.rows() - r;
  std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
  return g;
}

Sublattice kernel(const IntMatrix& m) {
  ColWork w;
  w.cols = m.columns();
  w.nrows = m.rows();
  w.track_u = true;
  w.ucols = IntMatrix::identity(m.cols()).columns();
  std::vector<std::size_t> order, pivot_rows;
  hnf_cols_inplace(w, order, pivot_rows);
  std::vector<std::vector<Int>> ker;
  for (std::size_t j = pivot_rows.size(); j < order.size(); ++j)
    ker.push_back(w.ucols[order[j]]);
  return Sublattice::from_columns(ker, m.cols());
}

Sublattice saturate(const Sublattice& s) {
  if (s.rank() == 0) return s;
  Sublattice perp = kernel(s.basis.transposed());
  if (perp.rank() == 0) return Sublattice::full(s.ambient_rank);
  return kernel(perp.basis.transposed());
}

Sublattice lattice_sum(const Sublattice& s, const Sublattice& t) {
  if (s.ambient_rank != t.ambient_rank) throw DimensionMismatch("lattice_sum ambient rank");
  auto cols = s.basis.columns();
  for (auto& c : t.basis.columns()) cols.push_back(c);
  return Sublattice::from_columns(cols, s.ambient_rank);
}

Sublattice lattice_intersect(const Sublattice& s, const Sublattice& t) {
  if (s.ambient_rank != t.ambient_rank)
    throw DimensionMismatch("lattice_intersect ambient rank");
  std::size_t n = s.ambient_rank;
  std::size_t ka = s.rank(), kb = t.rank();
  if (ka == 0 || kb == 0) return Sublattice::zero(n);
  IntMatrix rel(n, ka + kb);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < ka; ++c) rel(r, c) = s.basis(r, c);
    for (std::size_t c = 0; c < kb; ++c) rel(r, ka + c) = -t.basis(r, c);
  }
  Sublattice ker = kernel(rel);
  std::vector<std::vector<Int>> gens;
  for (std::size_t j = 0; j < ker.rank(); ++j) {
    std::vector<Int> v(n);
    for (std::size_t r = 0; r < n; ++r) {
      Int acc = 0;
      for (std::size_t c = 0; c < ka; ++c) acc += s.basis(r, c) * ker.basis(c, j);
      v[r] = acc;
    }
    gens.push_back(v);
  }
  return Sublattice::from_columns(gens, n);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw Error("rank_mod_p: modulus is not prime");
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  Int pp = p;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Int x = m(r, c) % pp;
      if (x < 0) x += pp;
      a[r][c] = static_cast<std::uint64_t>(x);
    }
  auto inv_mod = [&](std::uint64_t x) {
    // p is small; Fermat via fast pow
    std::uint64_t e = p - 2, b = x % p, acc = 1;
    while (e) {
      if (e & 1) acc = acc * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return acc;
  };
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rk], a[piv]);
    std::uint64_t inv = inv_mod(a[rk][c]);
    for (std::size_t j = c; j < cols; ++j) a[rk][j] = a[rk][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rk || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + (p - f) * a[rk][j]) % p;
    }
    ++rk;
  }
  return rk;
}

bool member(const Sublattice& s, const std::vector<Int>& v) {
  if (v.size() != s.ambient_rank) throw DimensionMismatch("member vector length");
  std::vector<Int> w = v;
  std::size_t n = s.ambient_rank;
  for (std::size_t j = 0; j < s.rank(); ++j) {
    std::size_t pr = 0;
    while (pr < n && s.basis(pr, j) == 0) ++pr;
    const Int& pv = s.basis(pr, j);
    if (w[pr] % pv != 0) return false;
    Int q = w[pr] / pv;
    if (q != 0)
      for (std::size_t r = pr; r < n; ++r) w[r] -= q * s.basis(r, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Rat>>& cols,
                                               const std::vector<Rat>& b) {
  std::size_t n = b.size();
  std::size_t k = cols.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) a[r][c] = cols[c][r];
  for (std::size_t r = 0; r < n; ++r) a[r][k] = b[r];
  std::vector<std::size_t> piv_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[row], a[piv]);
    Rat pv = a[row][c];
    for (std::size_t j = c; j <= k; ++j) a[row][j] /= pv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    piv_cols.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  std::vector<Rat> x(k, Rat(0));
  for (std::size_t i = 0; i < piv_cols.size(); ++i) x[piv_cols[i]] = a[i][k];
  return x;
}

std::optional<std::vector<Int>> solve_integer(const std::vector<std::vector<Int>>& cols,
                                              const std::vector<Int>& b, std::size_t nrows) {
  ColWork w;
  w.cols = cols;
  w.nrows = nrows;
  w.track_u = true;
  w.ucols = IntMatrix::identity(cols.size()).columns();
  std::vector<std::size_t> order, pivot_rows;
  hnf_cols_inplace(w, order, pivot_rows);
  // back-substitute through the echelon columns
  std::vector<Int> t = b;
  std::vector<Int> coeff(pivot_rows.size());
  for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
    const auto& col = w.cols[order[j]];
    std::size_t pr = pivot_rows[j];
    if (t[pr] % col[pr] != 0) return std::nullopt;
    Int q = t[pr] / col[pr];
    coeff[j] = q;
    if (q != 0)
      for (std::size_t r = 0; r < nrows; ++r) t[r] -= q * col[r];
  }
  for (const auto& x : t)
    if (x != 0) return std::nullopt;
  std::vector<Int> out(cols.size(), Int(0));
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (coeff[j] == 0) continue;
    const auto& uc = w.ucols[order[j]];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeff[j] * uc[i];
  }
  return out;
}

}  // namespace tilecoh
