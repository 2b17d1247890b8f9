#pragma once

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "tower.hpp"
#include "tower_build.hpp"
#include "unram.hpp"

namespace weakram {

// A base-field automorphism of a tower: a power of the Frobenius on the
// unramified part together with the image of the uniformizer, which must be
// a root of the matching conjugate of the Eisenstein polynomial.
template <class UF>
struct TowerAut {
  int frob;
  TowerElem<UF> pi_image;
};

template <class UF>
TowerElem<UF> apply_aut(const TowerPtr<UF>& L, const TowerAut<UF>& s,
                        const TowerElem<UF>& x) {
  const int times = s.frob * L->base()->degree();
  const auto& c = x.coeffs();
  const long e = L->e();
  auto lift = [&](long i) {
    auto y = c[static_cast<std::size_t>(i)].frobenius(times);
    return L->from_u(y, L->work_prec());
  };
  TowerElem<UF> acc = lift(e - 1);
  for (long i = e - 2; i >= 0; --i) acc = acc * s.pi_image + lift(i);
  return acc;
}

// All base-fixing automorphisms, ordered by Frobenius power and then by the
// deterministic order of the root finder.
template <class UF>
std::vector<TowerAut<UF>> tower_automorphisms(const TowerPtr<UF>& L) {
  std::vector<TowerAut<UF>> out;
  const auto& eis = L->eisenstein();
  for (int j = 0; j < L->f_rel(); ++j) {
    Poly<TowerElem<UF>> ej;
    ej.reserve(eis.size());
    for (const auto& c : eis) {
      auto cf = c.frobenius(j * L->base()->degree());
      ej.push_back(L->from_u(cf, L->e() * cf.precision()));
    }
    for (auto& r : tower_poly_roots(ej)) out.push_back(TowerAut<UF>{j, std::move(r)});
  }
  return out;
}

// An integral element whose powers form an O_K-basis of O_L, certified by a
// unit basis-change determinant against {W^j pi^i}.
template <class UF>
TowerElem<UF> monogenic_generator(const TowerPtr<UF>& L) {
  const long wp = L->work_prec();
  if (L->f_rel() == 1) return L->pi(wp);
  auto u = L->unram();
  auto w = L->from_u(u->lift(u->residue_field()->gen(), u->work_prec()), wp);
  std::vector<TowerElem<UF>> candidates{
      w + L->pi(wp), w + L->pi(wp) + L->pi_pow(2, wp), w * (L->one(wp) + L->pi(wp))};
  for (const auto& th : candidates) {
    Mat<typename UF::Elem> rows;
    auto pw = L->one(wp);
    for (long k = 0; k < L->m(); ++k) {
      rows.push_back(L->base_coords(pw));
      pw = pw * th;
    }
    try {
      if (det_valuation(rows) == 0) return th;
    } catch (const singular_basis&) {
    }
  }
  throw theorem_violation("no candidate generated the ring of integers");
}

template <class UF>
struct Extension {
  using KE = typename UF::Elem;

  TowerPtr<UF> L;
  Poly<KE> g;
  TowerElem<UF> alpha;
  TowerElem<UF> theta;
  Poly<KE> theta_min;
  std::vector<TowerAut<UF>> aut;
  int id_index;
  // table[i][j] = index of aut[i] composed after aut[j].
  std::vector<std::vector<int>> table;
  // v_L(aut(theta) - theta) per automorphism, -1 standing in for infinity.
  std::vector<long> lower_break;
  // Root-separation bound per automorphism, for matching pi-images.
  std::vector<long> sep;
  long different_exp;
  bool weakly_ramified;

  long e() const { return L->e(); }
  int f_rel() const { return L->f_rel(); }
  long m() const { return L->m(); }

  long filtration_size(long i) const {
    long cnt = 0;
    for (std::size_t k = 0; k < lower_break.size(); ++k)
      if (static_cast<int>(k) == id_index || lower_break[k] >= i + 1) ++cnt;
    return cnt;
  }

  TowerElem<UF> apply(int k, const TowerElem<UF>& x) const {
    return apply_aut(L, aut[static_cast<std::size_t>(k)], x);
  }

  int compose(int i, int j) const {
    return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  int inverse(int i) const {
    for (int j = 0; j < static_cast<int>(aut.size()); ++j)
      if (compose(i, j) == id_index) return j;
    throw theorem_violation("automorphism without an inverse in the table");
  }

  // Sum of sigma(x) over a set of automorphism indices.
  TowerElem<UF> orbit_sum(const std::vector<int>& idx, const TowerElem<UF>& x) const {
    TowerElem<UF> acc = apply(idx.at(0), x);
    for (std::size_t t = 1; t < idx.size(); ++t) acc = acc + apply(idx[t], x);
    return acc;
  }

  TowerElem<UF> trace(const TowerElem<UF>& x) const {
    std::vector<int> all;
    for (int k = 0; k < static_cast<int>(aut.size()); ++k) all.push_back(k);
    return orbit_sum(all, x);
  }

  TowerElem<UF> norm(const TowerElem<UF>& x) const {
    TowerElem<UF> acc = apply(0, x);
    for (int k = 1; k < static_cast<int>(aut.size()); ++k) acc = acc * apply(k, x);
    return acc;
  }

  // Matrix over K of sigma acting on the basis {W^j pi^i}; column c holds
  // the coordinates of sigma(basis element c).
  Mat<KE> matrix_of(int k) const {
    const long mm = m();
    Mat<KE> cols;
    for (long c = 0; c < mm; ++c) {
      std::vector<KE> unit;
      for (long t = 0; t < mm; ++t)
        unit.push_back(t == c ? L->base()->one(L->base()->work_prec())
                              : L->base()->zero(L->base()->work_prec()));
      auto img = apply(k, L->from_base_coords(unit, L->work_prec()));
      cols.push_back(L->base_coords(img));
    }
    Mat<KE> rows(static_cast<std::size_t>(mm), std::vector<KE>());
    for (long r = 0; r < mm; ++r)
      for (long c = 0; c < mm; ++c)
        rows[static_cast<std::size_t>(r)].push_back(
            cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    return rows;
  }
};

namespace ext_detail {

template <class UF>
int match_root(const std::vector<TowerAut<UF>>& auts, const std::vector<long>& sep,
               int frob, const TowerElem<UF>& x) {
  int found = -1;
  for (int k = 0; k < static_cast<int>(auts.size()); ++k) {
    if (auts[static_cast<std::size_t>(k)].frob != frob) continue;
    auto diff = x - auts[static_cast<std::size_t>(k)].pi_image;
    long bar = sep[static_cast<std::size_t>(k)];
    if (diff.precision() <= bar)
      throw precision_exhausted("root matching beyond the separation bound");
    if (diff.val_or_prec() > bar) {
      if (found >= 0) throw theorem_violation("two conjugate uniformizers collided");
      found = k;
    }
  }
  if (found < 0) throw theorem_violation("automorphism image is not a listed conjugate");
  return found;
}

}  // namespace ext_detail

// Enumerates the automorphisms of an already-built tower over its base and
// assembles the ramification data; throws not_galois when the automorphism
// count falls short of the degree.  When no distinguished root is supplied,
// the monogenic generator doubles as alpha.
template <class UF>
Extension<UF> analyze_galois_tower(TowerPtr<UF> L, Poly<typename UF::Elem> g,
                                   const TowerElem<UF>* alpha_opt) {
  using KE = typename UF::Elem;

  auto base = L->base();
  const long m = L->m();

  auto auts = tower_automorphisms(L);
  if (static_cast<long>(auts.size()) != m)
    throw not_galois("automorphism count is smaller than the degree");

  // Separation bound per root: the largest valuation at which the root
  // agrees with a different conjugate of the same Frobenius type.
  std::vector<long> sep(auts.size(), 0);
  for (std::size_t a = 0; a < auts.size(); ++a)
    for (std::size_t b = 0; b < auts.size(); ++b) {
      if (a == b || auts[a].frob != auts[b].frob) continue;
      sep[a] = std::max(sep[a], (auts[a].pi_image - auts[b].pi_image).val());
    }

  Extension<UF> ext{L,
                    std::move(g),
                    alpha_opt ? *alpha_opt : L->one(1),
                    L->one(1),
                    {},
                    std::move(auts),
                    0,
                    {},
                    {},
                    sep,
                    0,
                    false};

  ext.id_index = ext_detail::match_root(ext.aut, sep, 0, L->pi(L->work_prec()));

  const int f_rel = L->f_rel();
  ext.table.assign(ext.aut.size(), std::vector<int>(ext.aut.size(), 0));
  for (std::size_t i = 0; i < ext.aut.size(); ++i)
    for (std::size_t j = 0; j < ext.aut.size(); ++j) {
      auto img = apply_aut(L, ext.aut[i], ext.aut[j].pi_image);
      ext.table[i][j] =
          ext_detail::match_root(ext.aut, sep, (ext.aut[i].frob + ext.aut[j].frob) % f_rel, img);
    }

  long inertia = 0;
  for (const auto& s : ext.aut)
    if (s.frob == 0) ++inertia;
  if (inertia != L->e())
    throw theorem_violation("inertia count disagrees with the ramification index");

  ext.theta = monogenic_generator(L);
  if (!alpha_opt) ext.alpha = ext.theta;

  DepFinder<KE> dep;
  auto pw = L->one(L->work_prec());
  for (long k = 0; k <= m; ++k) {
    auto combo = dep.add(L->base_coords(pw));
    if (combo) {
      if (k < m) throw theorem_violation("generator satisfies a short relation");
      ext.theta_min.reserve(static_cast<std::size_t>(m) + 1);
      for (auto& c : *combo)
        ext.theta_min.push_back(base->zero(base->work_prec()) - c);
      ext.theta_min.push_back(base->one(base->work_prec()));
      break;
    }
    pw = pw * ext.theta;
  }
  if (ext.theta_min.empty())
    throw precision_exhausted("no relation among the generator powers was visible");

  ext.lower_break.assign(ext.aut.size(), -1);
  long different = 0;
  for (int k = 0; k < static_cast<int>(ext.aut.size()); ++k) {
    if (k == ext.id_index) continue;
    auto d = ext.apply(k, ext.theta) - ext.theta;
    if (d.is_prec_zero())
      throw precision_exhausted("ramification break beyond the working precision");
    ext.lower_break[static_cast<std::size_t>(k)] = d.val();
    different += d.val();
  }
  ext.different_exp = different;

  Poly<TowerElem<UF>> dmin;
  auto dtm = poly_derivative(ext.theta_min);
  dmin.reserve(dtm.size());
  for (const auto& c : dtm) {
    auto u = L->embed_base(c);
    dmin.push_back(L->from_u(u, L->e() * u.precision()));
  }
  auto dval = poly_eval(dmin, ext.theta);
  if (dval.is_prec_zero() || dval.val() != different)
    throw theorem_violation("different from the filtration disagrees with the derivative");

  ext.weakly_ramified = ext.filtration_size(2) == 1;
  return ext;
}

template <class UF>
Extension<UF> analyze_galois_tower(TowerPtr<UF> L) {
  return analyze_galois_tower(std::move(L), Poly<typename UF::Elem>{},
                              static_cast<const TowerElem<UF>*>(nullptr));
}

// Builds L = K[x]/(g) and analyzes it, with alpha the certified root of g.
template <class UF>
Extension<UF> analyze_galois_extension(std::shared_ptr<const UF> base,
                                       Poly<typename UF::Elem> g) {
  auto created = ext_create(base, g);
  return analyze_galois_tower(created.tower, std::move(g), &created.alpha);
}

// Tower for the unramified extension of relative degree t.
template <class UF>
TowerPtr<UF> ext_unramified(std::shared_ptr<const UF> base, int t) {
  const long wp = base->work_prec();
  auto u = t == 1 ? base : UF::make(base->p(), base->degree() * t, wp);
  Poly<typename UF::Elem> eis{u->zero(wp) - u->one(wp).shifted(1), u->one(wp)};
  return Tower<UF>::make(std::move(base), std::move(u), std::move(eis), wp);
}

// Compositum of a tower with the unramified extension of relative degree t:
// the same Eisenstein polynomial over the enlarged unramified part.
template <class UF>
TowerPtr<UF> ext_enlarge_unramified(const TowerPtr<UF>& L, int t) {
  if (t == 1) return L;
  auto u = L->unram();
  auto u2 = UF::make(u->p(), u->degree() * t, u->work_prec());
  auto gen = unram_embedding_gen(u, u2);
  Poly<typename UF::Elem> eis;
  eis.reserve(L->eisenstein().size());
  for (const auto& c : L->eisenstein()) eis.push_back(unram_embed(u, u2, c, gen));
  return Tower<UF>::make(L->base(), std::move(u2), std::move(eis), L->work_prec());
}

}  // namespace weakram
