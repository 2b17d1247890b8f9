#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "ff_poly.hpp"
#include "hensel.hpp"
#include "poly.hpp"
#include "tower.hpp"

namespace weakram {

namespace roots_detail {

// One root of g by residue branching: strip the content, read off the
// residue polynomial, and for each residue root either take an exact hit,
// certify a Newton point and refine it, or recurse on the branch polynomial
// g(lift + pi z).  Branches that merely approximate a root die out when
// their residue polynomial becomes constant.
template <class UF>
std::optional<TowerElem<UF>> find_root_at(const Poly<TowerElem<UF>>& g, long depth,
                                          long budget) {
  using Elem = TowerElem<UF>;
  if (g.size() < 2) return std::nullopt;
  auto tw = g.back().tower();
  if (depth > budget)
    throw precision_exhausted("root search descended past the working precision");

  long content = g[0].val_or_prec();
  for (const auto& c : g) content = std::min(content, c.val_or_prec());
  Poly<Elem> h;
  h.reserve(g.size());
  for (const auto& c : g) h.push_back(tw->mul_pi_pow(c, -content));

  long target = h[0].precision();
  for (const auto& c : h) target = std::min(target, c.precision());
  target = std::max(target, 1L);

  auto kL = tw->unram()->residue_field();
  FFPoly hbar;
  hbar.reserve(h.size());
  for (const auto& c : h) hbar.push_back(c.residue());
  hbar = ffp_trim(std::move(hbar));
  if (ffp_deg(hbar) < 1) return std::nullopt;

  auto dh = poly_derivative(h);
  for (const auto& rbar : ffp_roots(kL, hbar)) {
    Elem z = tw->from_u(tw->unram()->lift(rbar, tw->unram()->work_prec()), target);
    Elem fz = poly_eval(h, z);
    if (fz.is_prec_zero()) return z;
    Elem dfz = poly_eval(dh, z);
    if (!dfz.is_prec_zero() && fz.val() > 2 * dfz.val()) return hensel_root(h, z, target);
    auto branch = poly_compose_linear(h, z, tw->pi(tw->work_prec()));
    auto y = find_root_at(branch, depth + 1, budget);
    if (y) return z + tw->mul_pi_pow(*y, 1);
  }
  return std::nullopt;
}

}  // namespace roots_detail

// Every root of a monic polynomial over the tower.  Roots are found one at
// a time with the quotient by x - root carried forward, so that clustered
// conjugates are all seen even when one of them hits a branch point exactly.
template <class UF>
std::vector<TowerElem<UF>> tower_poly_roots(const Poly<TowerElem<UF>>& g) {
  using Elem = TowerElem<UF>;
  std::vector<Elem> out;
  if (g.size() < 2) return out;
  long budget = 2;
  for (const auto& c : g) budget = std::max(budget, c.precision());
  budget += 2;

  Poly<Elem> h = g;
  while (h.size() >= 2) {
    auto r = roots_detail::find_root_at(h, 0, budget);
    if (!r) break;
    out.push_back(*r);
    Poly<Elem> q(h.size() - 1, h.back());
    for (std::size_t k = h.size() - 1; k-- > 1;) q[k - 1] = h[k] + *r * q[k];
    h = std::move(q);
  }
  return out;
}

}  // namespace weakram
