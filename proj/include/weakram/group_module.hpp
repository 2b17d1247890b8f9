#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "extension.hpp"
#include "finite_field.hpp"
#include "group.hpp"
#include "linalg.hpp"

namespace weakram {

// ---------------------------------------------------------------------------
// Exact linear algebra over a finite field.

inline FFElem ff_det(Mat<FFElem> a) {
  const std::size_t n = a.size();
  if (n == 0) throw dimension_mismatch("ff_det: empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw dimension_mismatch("ff_det: not square");
  auto fld = a[0][0].field();
  FFElem det = fld->one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return fld->zero();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      FFElem f = a[i][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[i][k] = a[i][k] - f * a[col][k];
    }
  }
  return det;
}

inline std::size_t ff_rank(Mat<FFElem> a) {
  if (a.empty()) return 0;
  const std::size_t w = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col].is_zero()) continue;
      FFElem f = a[i][col] / a[rank][col];
      for (std::size_t k = col; k < w; ++k) a[i][k] = a[i][k] - f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<FFElem> ff_matvec(const Mat<FFElem>& a, const std::vector<FFElem>& x) {
  std::vector<FFElem> y;
  y.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != x.size()) throw dimension_mismatch("ff_matvec: bad shapes");
    FFElem s = x[0].field()->zero();
    for (std::size_t k = 0; k < x.size(); ++k) s = s + row[k] * x[k];
    y.push_back(s);
  }
  return y;
}

// ---------------------------------------------------------------------------
// Modules over a modular group algebra k[G], given by one matrix per group
// element.  The regular representation sends g to the permutation matrix of
// left multiplication.

inline std::vector<Mat<FFElem>> gm_regular_action(const FFPtr& k, const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Mat<FFElem>> action;
  action.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    Mat<FFElem> m(static_cast<std::size_t>(n),
                  std::vector<FFElem>(static_cast<std::size_t>(n), k->zero()));
    for (int s = 0; s < n; ++s) m[static_cast<std::size_t>(g.op(a, s))][static_cast<std::size_t>(s)] = k->one();
    action.push_back(std::move(m));
  }
  return action;
}

namespace gm_detail {

inline void check_module_shapes(const FiniteGroup& g, const std::vector<Mat<FFElem>>& action,
                                const std::vector<FFElem>& x) {
  if (action.size() != static_cast<std::size_t>(g.order()))
    throw dimension_mismatch("module action: one matrix per group element required");
  for (const auto& m : action) {
    if (m.size() != x.size()) throw dimension_mismatch("module action: bad matrix height");
    for (const auto& row : m)
      if (row.size() != x.size()) throw dimension_mismatch("module action: bad matrix width");
  }
}

}  // namespace gm_detail

// For a p-group acting in characteristic p on a module of dimension |G|, x
// generates freely exactly when the all-group trace does not kill it.
inline bool gm_trace_criterion(const FiniteGroup& g, const std::vector<Mat<FFElem>>& action,
                               const std::vector<FFElem>& x) {
  if (x.empty()) throw dimension_mismatch("trace criterion: empty vector");
  gm_detail::check_module_shapes(g, action, x);
  auto fld = x[0].field();
  if (x.size() != static_cast<std::size_t>(g.order()))
    throw dimension_mismatch("trace criterion: module dimension must match the group order");
  for (int a = 0; a < g.order(); ++a) {
    int ord = g.element_order(a);
    while (ord % fld->p() == 0) ord /= static_cast<int>(fld->p());
    if (ord != 1) throw invalid_degree("trace criterion: the group is not a p-group");
  }
  std::vector<FFElem> y(x.size(), fld->zero());
  for (const auto& m : action) {
    auto t = ff_matvec(m, x);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = y[k] + t[k];
  }
  for (const auto& v : y)
    if (!v.is_zero()) return true;
  return false;
}

// Ground-truth generator test: x generates the module over k[G] exactly when
// the orbit vectors span.  Small coefficient spaces are enumerated outright,
// larger ones fall back to an exact rank computation.
inline bool gm_spanning_oracle(const FiniteGroup& g, const std::vector<Mat<FFElem>>& action,
                               const std::vector<FFElem>& x) {
  if (x.empty()) throw dimension_mismatch("spanning oracle: empty vector");
  gm_detail::check_module_shapes(g, action, x);
  auto fld = x[0].field();
  Mat<FFElem> orbit;
  orbit.reserve(action.size());
  for (const auto& m : action) orbit.push_back(ff_matvec(m, x));

  std::uint64_t q = 1;
  for (int i = 0; i < fld->degree(); ++i) q *= static_cast<std::uint64_t>(fld->p());
  std::uint64_t combos = 1, points = 1;
  bool small = q <= (1u << 20);
  for (int a = 0; a < g.order() && small; ++a) {
    combos *= q;
    if (combos > (1u << 20)) small = false;
  }
  for (std::size_t t = 0; t < x.size() && small; ++t) {
    points *= q;
    if (points > (1u << 20)) small = false;
  }
  if (!small) return ff_rank(orbit) == x.size();

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> idx(action.size(), 0);
  for (;;) {
    std::vector<FFElem> v(x.size(), fld->zero());
    for (std::size_t a = 0; a < orbit.size(); ++a) {
      if (idx[a] == 0) continue;
      FFElem c = fld->element(idx[a]);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] + c * orbit[a][k];
    }
    std::vector<std::uint64_t> key;
    key.reserve(v.size());
    for (const auto& entry : v) key.push_back(fld->index_of(entry));
    seen.insert(std::move(key));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == q) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return seen.size() == points;
}

// ---------------------------------------------------------------------------
// O_K-bases of the fractional ideals P_L^n, built by shifting the frozen
// basis {W^j pi^i}: index t = j*e + i carries pi-exponent n + ((i-n) mod e),
// so the valuations cover [n, n+e) once per residue class and f times total.

template <class UF>
struct IdealBasis {
  long n;
  std::vector<TowerElem<UF>> elems;
  std::vector<long> base_shift;  // per index, the pi_K-exponent (k_t - i_t)/e
};

template <class UF>
IdealBasis<UF> gm_ideal_basis(const TowerPtr<UF>& L, long n) {
  const long e = L->e();
  const long mm = L->m();
  const long wp = L->work_prec();
  IdealBasis<UF> ib;
  ib.n = n;
  for (long t = 0; t < mm; ++t) {
    const long i = t % e;
    const long k = n + (((i - n) % e) + e) % e;
    std::vector<typename UF::Elem> unit;
    unit.reserve(static_cast<std::size_t>(mm));
    for (long s = 0; s < mm; ++s)
      unit.push_back(s == t ? L->base()->one(L->base()->work_prec())
                            : L->base()->zero(L->base()->work_prec()));
    auto elem = L->mul_pi_pow(L->from_base_coords(unit, wp), k - i);
    if (elem.val() != k) throw theorem_violation("ideal basis element has the wrong valuation");
    ib.elems.push_back(std::move(elem));
    ib.base_shift.push_back((k - i) / e);
  }
  return ib;
}

// Coordinates of x in an ideal basis; exact coefficientwise shifts of the
// plain tower coordinates.
template <class UF>
std::vector<typename UF::Elem> gm_ideal_coords(const TowerPtr<UF>& L, const IdealBasis<UF>& ib,
                                               const TowerElem<UF>& x) {
  auto cs = L->base_coords(x);
  for (std::size_t t = 0; t < cs.size(); ++t)
    cs[t] = cs[t].shifted(-ib.base_shift[t]);
  return cs;
}

// ---------------------------------------------------------------------------
// Free generator certificate for P_L^n over O_K[G]: the conjugates of delta,
// written in an ideal basis and reduced to the residue field, must form an
// invertible matrix.

struct FreenessCertificate {
  long n = 0;
  bool free_generator = false;
  Mat<FFElem> residue_matrix;  // row per automorphism, column per basis index
  FFElem det;
};

template <class UF>
FreenessCertificate gm_is_free_generator(const Extension<UF>& ext, const TowerElem<UF>& delta,
                                         long n) {
  if (!delta.is_prec_zero() && delta.val() < n)
    throw not_in_ideal("the candidate lies outside the target ideal");
  if (delta.is_prec_zero() && delta.precision() < n)
    throw precision_exhausted("candidate valuation unknown at this precision");
  auto ib = gm_ideal_basis(ext.L, n);
  FreenessCertificate cert;
  cert.n = n;
  for (int k = 0; k < static_cast<int>(ext.aut.size()); ++k) {
    auto coords = gm_ideal_coords(ext.L, ib, ext.apply(k, delta));
    std::vector<FFElem> row;
    row.reserve(coords.size());
    for (const auto& c : coords) {
      if (!c.is_prec_zero() && c.val() < 0)
        throw not_in_ideal("a conjugate lies outside the target ideal");
      row.push_back(c.residue());
    }
    cert.residue_matrix.push_back(std::move(row));
  }
  cert.det = ff_det(cert.residue_matrix);
  cert.free_generator = !cert.det.is_zero();
  return cert;
}

// ---------------------------------------------------------------------------
// Group-ring elements as coefficient vectors over K, one slot per listed
// automorphism.

template <class UF>
std::vector<typename UF::Elem> gr_mul(const Extension<UF>& ext,
                                      const std::vector<typename UF::Elem>& a,
                                      const std::vector<typename UF::Elem>& b) {
  const std::size_t mm = ext.aut.size();
  if (a.size() != mm || b.size() != mm) throw dimension_mismatch("gr_mul: bad lengths");
  std::vector<typename UF::Elem> out(mm, zero_like(a[0]));
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) {
      auto& slot = out[static_cast<std::size_t>(ext.table[i][j])];
      slot = slot + a[i] * b[j];
    }
  return out;
}

template <class UF>
TowerElem<UF> gr_apply(const Extension<UF>& ext, const std::vector<typename UF::Elem>& a,
                       const TowerElem<UF>& x) {
  const std::size_t mm = ext.aut.size();
  if (a.size() != mm) throw dimension_mismatch("gr_apply: bad length");
  std::optional<std::vector<typename UF::Elem>> acc;
  for (std::size_t k = 0; k < mm; ++k) {
    auto cs = ext.L->base_coords(ext.apply(static_cast<int>(k), x));
    for (auto& c : cs) c = a[k] * c;
    if (!acc) {
      acc = std::move(cs);
    } else {
      for (std::size_t t = 0; t < acc->size(); ++t) (*acc)[t] = (*acc)[t] + cs[t];
    }
  }
  return ext.L->from_base_coords(*acc, ext.L->work_prec());
}

// ---------------------------------------------------------------------------
// Lattice bookkeeping in group-ring coordinates.  A lattice is a full-rank
// list of basis vectors; the index [A : B] is v_K det of the change of basis
// and is positive when B is a finite-index sublattice of A.

template <class E>
long gm_module_index(const Mat<E>& a, const Mat<E>& b) {
  if (a.size() != b.size() || a.empty()) throw dimension_mismatch("module index: bad shapes");
  return det_valuation(b) - det_valuation(a);
}

template <class E>
bool gm_lattice_equal(const Mat<E>& a, const Mat<E>& b) {
  if (a.empty() || a.size() != b.size()) return false;
  const std::size_t w = a[0].size();
  auto ea = lattice_basis(a, w);
  auto eb = lattice_basis(b, w);
  if (ea.size() != a.size() || eb.size() != b.size()) return false;
  for (const auto& row : eb)
    if (!lattice_coords(ea, row)) return false;
  for (const auto& row : ea)
    if (!lattice_coords(eb, row)) return false;
  return true;
}

template <class UF>
Mat<typename UF::Elem> gm_group_ring_rows(const Extension<UF>& ext) {
  using KE = typename UF::Elem;
  const long mm = ext.m();
  auto base = ext.L->base();
  Mat<KE> rows;
  for (long i = 0; i < mm; ++i) {
    std::vector<KE> row;
    for (long k = 0; k < mm; ++k)
      row.push_back(i == k ? base->one(base->work_prec()) : base->zero(base->work_prec()));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Echelon basis of O_K[G] with pi_K^{-1} Tr_{G_0} adjoined: one fractional
// row per coset of the inertia subgroup.
template <class UF>
Mat<typename UF::Elem> gm_adjoined_trace_rows(const Extension<UF>& ext) {
  using KE = typename UF::Elem;
  const long mm = ext.m();
  auto base = ext.L->base();
  Mat<KE> rows = gm_group_ring_rows(ext);
  for (int j = 0; j < ext.f_rel(); ++j) {
    std::vector<KE> row(static_cast<std::size_t>(mm), base->zero(base->work_prec()));
    for (long k = 0; k < mm; ++k)
      if (ext.aut[static_cast<std::size_t>(k)].frob == j)
        row[static_cast<std::size_t>(k)] = base->one(base->work_prec()).shifted(-1);
    rows.push_back(std::move(row));
  }
  auto basis = lattice_basis(std::move(rows), static_cast<std::size_t>(mm));
  if (basis.size() != static_cast<std::size_t>(mm))
    throw singular_basis("adjoined trace lattice is degenerate");
  return basis;
}

// The full multiplier ring {x in K[G] : x O_L <= O_L}, computed without any
// ansatz: the integrality constraints on the coordinates of x sigma(b) form
// a row lattice whose dual is the order.  Returned as an echelon basis.
template <class UF>
Mat<typename UF::Elem> gm_associated_order(const Extension<UF>& ext) {
  using KE = typename UF::Elem;
  const long mm = ext.m();
  const long wp = ext.L->work_prec();
  auto base = ext.L->base();
  Mat<KE> constraints;
  constraints.reserve(static_cast<std::size_t>(mm * mm));
  for (long j = 0; j < mm; ++j) {
    std::vector<KE> unit;
    for (long s = 0; s < mm; ++s)
      unit.push_back(s == j ? base->one(base->work_prec()) : base->zero(base->work_prec()));
    auto bj = ext.L->from_base_coords(unit, wp);
    Mat<KE> per_sigma;
    per_sigma.reserve(static_cast<std::size_t>(mm));
    for (long k = 0; k < mm; ++k)
      per_sigma.push_back(ext.L->base_coords(ext.apply(static_cast<int>(k), bj)));
    for (long t = 0; t < mm; ++t) {
      std::vector<KE> row;
      row.reserve(static_cast<std::size_t>(mm));
      for (long k = 0; k < mm; ++k)
        row.push_back(per_sigma[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)]);
      constraints.push_back(std::move(row));
    }
  }
  auto tri = lattice_basis(std::move(constraints), static_cast<std::size_t>(mm));
  if (tri.size() != static_cast<std::size_t>(mm))
    throw singular_basis("associated order: the conjugate span is degenerate");
  Mat<KE> basis;
  for (long i = 0; i < mm; ++i) {
    std::vector<KE> unit;
    for (long s = 0; s < mm; ++s)
      unit.push_back(s == i ? base->one(base->work_prec()) : base->zero(base->work_prec()));
    basis.push_back(solve_square(tri, unit));
  }
  auto out = lattice_basis(std::move(basis), static_cast<std::size_t>(mm));
  if (out.size() != static_cast<std::size_t>(mm))
    throw singular_basis("associated order basis is degenerate");
  return out;
}

// ---------------------------------------------------------------------------
// Joint verification that the associated order is O_K[G] with the scaled
// inertia trace adjoined, and that eps generates O_L freely over it.

struct AssocOrderReport {
  long index_over_group_ring = 0;
  bool oracle_matches = false;
  bool epsilon_generates = false;
  bool wild_trace_contained = false;
  bool holds() const { return oracle_matches && epsilon_generates && wild_trace_contained; }
};

template <class UF>
AssocOrderReport gm_verify_assoc_order_theorem(const Extension<UF>& ext,
                                               const TowerElem<UF>& eps) {
  using KE = typename UF::Elem;
  const long mm = ext.m();
  AssocOrderReport report;

  auto aprime = gm_adjoined_trace_rows(ext);
  report.index_over_group_ring = gm_module_index(aprime, gm_group_ring_rows(ext));
  report.oracle_matches = gm_lattice_equal(aprime, gm_associated_order(ext));

  Mat<KE> images;
  bool integral = true;
  for (const auto& row : aprime) {
    auto cs = ext.L->base_coords(gr_apply(ext, row, eps));
    for (const auto& c : cs)
      if (!c.is_prec_zero() && c.val() < 0) integral = false;
    images.push_back(std::move(cs));
  }
  try {
    report.epsilon_generates = integral && det_valuation(images) == 0;
  } catch (const singular_basis&) {
    report.epsilon_generates = false;
  }

  std::vector<int> inertia;
  for (long k = 0; k < mm; ++k)
    if (ext.aut[static_cast<std::size_t>(k)].frob == 0) inertia.push_back(static_cast<int>(k));
  bool contained = true;
  auto base = ext.L->base();
  for (long t = 0; t < mm; ++t) {
    std::vector<KE> unit;
    for (long s = 0; s < mm; ++s)
      unit.push_back(s == t ? base->one(base->work_prec()) : base->zero(base->work_prec()));
    auto tr = ext.orbit_sum(inertia, ext.L->from_base_coords(unit, ext.L->work_prec()));
    if (tr.is_prec_zero()) {
      if (tr.precision() < ext.e())
        throw precision_exhausted("inertia trace invisible at this precision");
    } else if (tr.val() < ext.e()) {
      contained = false;
    }
  }
  report.wild_trace_contained = contained;
  return report;
}

// v_K of the trace ideal Tr_{L/K}(P_L^i), as the least coordinate valuation
// over an ideal basis.
template <class UF>
long gm_trace_ideal_valuation(const Extension<UF>& ext, long i) {
  auto ib = gm_ideal_basis(ext.L, i);
  std::optional<long> mn;
  long floor_prec = ext.L->work_prec();
  for (const auto& b : ib.elems) {
    auto tr = ext.trace(b);
    if (tr.is_prec_zero()) {
      floor_prec = std::min(floor_prec, tr.precision());
      continue;
    }
    long v = tr.val();
    if (v % ext.e() != 0) throw theorem_violation("full trace left the base field");
    if (!mn || v / ext.e() < *mn) mn = v / ext.e();
  }
  if (!mn || *mn * ext.e() >= floor_prec)
    throw precision_exhausted("trace ideal valuation not visible at this precision");
  return *mn;
}

}  // namespace weakram
