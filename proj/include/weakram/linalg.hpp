#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace weakram {

// Linear algebra over a complete local field whose elements carry their own
// absolute precision.  Pivots are chosen by minimal valuation among entries
// with at least one certain digit; a column with no certain entry is treated
// as singular rather than silently zero.

template <class E>
using Mat = std::vector<std::vector<E>>;

template <class E>
E zero_like(const E& sample) {
  return same_field_int(sample, 0);
}

// Solve A x = b for square A.  Throws singular_basis when no usable pivot
// exists (which may also mean "not enough precision to tell").
template <class E>
std::vector<E> solve_square(Mat<E> a, std::vector<E> b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw dimension_mismatch("solve_square: bad shapes");
  for (const auto& row : a)
    if (row.size() != n) throw dimension_mismatch("solve_square: bad shapes");
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> piv;
    long best = 0;
    for (std::size_t i = j; i < n; ++i) {
      if (a[i][j].is_prec_zero()) continue;
      long v = a[i][j].val();
      if (!piv || v < best) {
        piv = i;
        best = v;
      }
    }
    if (!piv) throw singular_basis("solve_square: no pivot in column");
    std::swap(a[j], a[*piv]);
    std::swap(b[j], b[*piv]);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j].is_prec_zero()) continue;
      E f = a[i][j] / a[j][j];
      for (std::size_t k = j; k < n; ++k) a[i][k] = a[i][k] - f * a[j][k];
      b[i] = b[i] - f * b[j];
    }
  }
  std::vector<E> x(n, zero_like(b[0]));
  for (std::size_t jj = n; jj-- > 0;) {
    E s = b[jj];
    for (std::size_t k = jj + 1; k < n; ++k) s = s - a[jj][k] * x[k];
    x[jj] = s / a[jj][jj];
  }
  return x;
}

// Valuation of det(A); throws singular_basis when the determinant cannot be
// certified nonzero at the available precision.
template <class E>
long det_valuation(Mat<E> a) {
  const std::size_t n = a.size();
  long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> piv;
    long best = 0;
    for (std::size_t i = j; i < n; ++i) {
      if (a[i][j].is_prec_zero()) continue;
      long v = a[i][j].val();
      if (!piv || v < best) {
        piv = i;
        best = v;
      }
    }
    if (!piv) throw singular_basis("det_valuation: no pivot in column");
    std::swap(a[j], a[*piv]);
    total += best;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j].is_prec_zero()) continue;
      E f = a[i][j] / a[j][j];
      for (std::size_t k = j + 1; k < n; ++k) a[i][k] = a[i][k] - f * a[j][k];
    }
  }
  return total;
}

// Incrementally finds the first linear dependency in a stream of vectors:
// add() returns the coefficients c with v_new = sum c_i v_i over the vectors
// added before, or nothing while the stream stays independent.
template <class E>
class DepFinder {
 public:
  std::optional<std::vector<E>> add(std::vector<E> v) {
    if (v.empty()) throw dimension_mismatch("DepFinder: empty vector");
    const std::size_t idx = count_++;
    std::vector<E> comb(idx + 1, zero_like(v[0]));
    comb[idx] = same_field_int(v[0], 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t j = pivots_[r];
      if (v[j].is_prec_zero()) continue;
      E f = v[j] / rows_[r][j];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] - f * rows_[r][k];
      for (std::size_t k = 0; k < combs_[r].size(); ++k)
        comb[k] = comb[k] - f * combs_[r][k];
    }
    std::optional<std::size_t> piv;
    long best = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_prec_zero()) continue;
      long val = v[k].val();
      if (!piv || val < best) {
        piv = k;
        best = val;
      }
    }
    if (piv) {
      pivots_.push_back(*piv);
      rows_.push_back(std::move(v));
      combs_.push_back(std::move(comb));
      return std::nullopt;
    }
    std::vector<E> out;
    out.reserve(idx);
    for (std::size_t k = 0; k < idx; ++k) out.push_back(-comb[k]);
    return out;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t count_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::vector<E>> combs_;
};

// Echelon basis of the O_K-row span of the given vectors, pivot columns
// increasing left to right.  Only integral multiples of the minimal-valuation
// pivot are ever subtracted, so the span is preserved exactly; rows that
// reduce to precision-zero are dropped.
template <class E>
Mat<E> lattice_basis(Mat<E> work, std::size_t width) {
  for (const auto& v : work)
    if (v.size() != width) throw dimension_mismatch("lattice_basis: bad row width");
  Mat<E> basis;
  for (std::size_t col = 0; col < width; ++col) {
    std::optional<std::size_t> piv;
    long best = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][col].is_prec_zero()) continue;
      long v = work[i][col].val();
      if (!piv || v < best) {
        piv = i;
        best = v;
      }
    }
    if (!piv) continue;
    std::vector<E> row = std::move(work[*piv]);
    work.erase(work.begin() + *piv);
    for (auto& w : work) {
      if (w[col].is_prec_zero()) continue;
      E f = w[col] / row[col];
      for (std::size_t k = col; k < width; ++k) w[k] = w[k] - f * row[k];
    }
    basis.push_back(std::move(row));
  }
  return basis;
}

// Pivot column of each echelon basis row (its leftmost certain entry).
template <class E>
std::vector<std::size_t> echelon_pivots(const Mat<E>& basis) {
  std::vector<std::size_t> pivots;
  for (const auto& row : basis) {
    std::optional<std::size_t> lead;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_prec_zero()) {
        lead = k;
        break;
      }
    if (!lead) throw singular_basis("echelon_pivots: zero basis row");
    pivots.push_back(*lead);
  }
  return pivots;
}

// Coordinates of x in the echelon lattice basis when they are all integral;
// nothing when x lies outside the O_K-span.
template <class E>
std::optional<std::vector<E>> lattice_coords(const Mat<E>& basis, std::vector<E> x) {
  auto pivots = echelon_pivots(basis);
  std::vector<E> coords;
  coords.reserve(basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const std::size_t j = pivots[r];
    if (x[j].is_prec_zero()) {
      coords.push_back(zero_like(x[j]));
      continue;
    }
    E c = x[j] / basis[r][j];
    if (c.val() < 0) return std::nullopt;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = x[k] - c * basis[r][k];
    coords.push_back(std::move(c));
  }
  for (const auto& e : x)
    if (!e.is_prec_zero()) return std::nullopt;
  return coords;
}

// Column-transform Smith data for a matrix over the valuation ring: returns
// the pivot valuations d_0 <= d_1 <= ... together with the columns of the
// accumulated unimodular transform P (as vectors p[i]), so that A P is
// column-triangular with column i exactly divisible by pi^{d_i}.  Columns of
// P beyond the rank generate directions on which A vanishes at the working
// precision.
template <class E>
std::pair<std::vector<long>, Mat<E>> smith_column_form(Mat<E> a, std::size_t ncols) {
  const std::size_t nrows = a.size();
  if (nrows == 0 || ncols == 0) throw dimension_mismatch("smith_column_form: empty matrix");
  for (const auto& row : a)
    if (row.size() != ncols) throw dimension_mismatch("smith_column_form: bad row width");
  Mat<E> p(ncols, std::vector<E>(ncols, zero_like(a[0][0])));
  for (std::size_t i = 0; i < ncols; ++i) p[i][i] = same_field_int(a[0][0], 1);
  std::vector<long> diag;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < nrows; ++col) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    long best = 0;
    for (std::size_t i = top; i < nrows; ++i)
      for (std::size_t j = col; j < ncols; ++j) {
        if (a[i][j].is_prec_zero()) continue;
        long v = a[i][j].val();
        if (!piv || v < best) {
          piv = {i, j};
          best = v;
        }
      }
    if (!piv) break;
    std::swap(a[piv->first], a[top]);
    if (piv->second != col) {
      for (std::size_t i = 0; i < nrows; ++i) std::swap(a[i][piv->second], a[i][col]);
      std::swap(p[piv->second], p[col]);
    }
    for (std::size_t j = col + 1; j < ncols; ++j) {
      if (a[top][j].is_prec_zero()) continue;
      E f = a[top][j] / a[top][col];
      for (std::size_t i = top; i < nrows; ++i) a[i][j] = a[i][j] - f * a[i][col];
      for (std::size_t k = 0; k < ncols; ++k) p[j][k] = p[j][k] - f * p[col][k];
    }
    for (std::size_t i = top + 1; i < nrows; ++i) {
      if (a[i][col].is_prec_zero()) continue;
      E f = a[i][col] / a[top][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] = a[i][j] - f * a[top][j];
    }
    diag.push_back(best);
    ++top;
  }
  return {diag, p};
}

}  // namespace weakram
