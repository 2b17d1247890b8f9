#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "ff_poly.hpp"
#include "hensel.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "tower.hpp"
#include "unram.hpp"

namespace weakram {

// Quotient ring A = V[x]/(h) for a monic integral h over an unramified
// backend V.  Elements are coefficient vectors of length deg h.  A is a
// field exactly when h is irreducible; nothing here assumes that, and steps
// that could only fail on a zero divisor report reducible_polynomial.
template <class UF>
struct QuotRing {
  using VE = typename UF::Elem;
  using VPtr = std::shared_ptr<const UF>;
  using AElem = std::vector<VE>;

  VPtr v;
  Poly<VE> h;
  long n;

  QuotRing(VPtr vv, Poly<VE> hh) : v(std::move(vv)), h(std::move(hh)) {
    n = static_cast<long>(h.size()) - 1;
  }

  AElem pad(Poly<VE> c) const {
    while (static_cast<long>(c.size()) < n) c.push_back(v->zero(v->work_prec()));
    return c;
  }

  AElem one() const {
    Poly<VE> c{v->one(v->work_prec())};
    return pad(std::move(c));
  }

  AElem scalar(const VE& s) const {
    Poly<VE> c{s};
    return pad(std::move(c));
  }

  AElem from_poly(Poly<VE> c) const {
    if (static_cast<long>(c.size()) > n) c = poly_divrem_monic(c, h).second;
    return pad(std::move(c));
  }

  AElem mul(const AElem& a, const AElem& b) const { return from_poly(poly_mul(a, b)); }

  AElem add(const AElem& a, const AElem& b) const {
    AElem out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
  }

  AElem sub(const AElem& a, const AElem& b) const {
    AElem out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
  }

  AElem mul_by_x(const AElem& a) const {
    AElem out;
    out.reserve(a.size());
    const VE& top = a.back();
    out.push_back(v->zero(v->work_prec()) - top * h[0]);
    for (long i = 1; i < n; ++i)
      out.push_back(a[static_cast<std::size_t>(i - 1)] - top * h[static_cast<std::size_t>(i)]);
    return out;
  }

  AElem x_power(long k) const {
    AElem cur = one();
    for (long i = 0; i < k; ++i) cur = mul_by_x(cur);
    return cur;
  }

  // Exact coefficientwise multiplication by pi_V^s.
  AElem shift(const AElem& a, long s) const {
    AElem out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c.shifted(s));
    return out;
  }

  bool is_prec_zero(const AElem& a) const {
    for (const auto& c : a)
      if (!c.is_prec_zero()) return false;
    return true;
  }

  // Row i, column j holds coefficient i of a * x^j: M * q gives the
  // coordinates of a * (sum q_j x^j).
  Mat<VE> mul_matrix(const AElem& a) const {
    Mat<VE> m(static_cast<std::size_t>(n), std::vector<VE>());
    AElem col = a;
    for (long j = 0; j < n; ++j) {
      for (long i = 0; i < n; ++i) m[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
      if (j + 1 < n) col = mul_by_x(col);
    }
    return m;
  }

  AElem eval(const std::vector<AElem>& f, const AElem& x) const {
    AElem acc = f.back();
    for (long k = static_cast<long>(f.size()) - 2; k >= 0; --k)
      acc = add(mul(acc, x), f[static_cast<std::size_t>(k)]);
    return acc;
  }
};

// Newton iteration for a root of F (coefficients in A) starting from an
// approximation whose residue is a simple root; divisions go through the
// multiplication matrix.  Non-convergence within the doubling budget or a
// singular division can only happen over a zero divisor.
template <class UF>
typename QuotRing<UF>::AElem ring_newton_root(const QuotRing<UF>& A,
                                              const std::vector<typename QuotRing<UF>::AElem>& f,
                                              typename QuotRing<UF>::AElem z) {
  std::vector<typename QuotRing<UF>::AElem> df;
  for (std::size_t k = 1; k < f.size(); ++k) {
    typename QuotRing<UF>::AElem c;
    for (const auto& e : f[k]) c.push_back(e * same_field_int(e, static_cast<long>(k)));
    df.push_back(std::move(c));
  }
  for (int iter = 0; iter < 64; ++iter) {
    auto fz = A.eval(f, z);
    if (A.is_prec_zero(fz)) return z;
    auto dfz = A.eval(df, z);
    std::vector<typename UF::Elem> delta;
    try {
      delta = solve_square(A.mul_matrix(dfz), fz);
    } catch (const singular_basis&) {
      throw reducible_polynomial("ring newton step hit a non-invertible derivative");
    }
    z = A.sub(z, delta);
  }
  throw reducible_polynomial("ring newton iteration failed to converge");
}

namespace build_detail {

template <class E>
void require_integral(const Poly<E>& h, const char* what) {
  for (const auto& c : h)
    if (!c.is_prec_zero() && c.val() < 0) throw reducible_polynomial(what);
}

// Residue of c / pi^k, guarding against unusably low precision.
template <class E>
FFElem scaled_residue(const E& c, long k) {
  E s = c.shifted(-k);
  if (s.is_prec_zero() && s.precision() < 1)
    throw precision_exhausted("residual coefficient hidden below the working precision");
  return s.residue();
}

}  // namespace build_detail

// Presents V[x]/(h) as a two-step tower over base0 by alternating three
// moves: peel off the unramified part named by an irreducible residual
// factor, recentre when the residual is a power of a linear factor, and
// finish when the slope has full denominator.  Every failure mode of an
// honest input maps to reducible_polynomial, precision_exhausted, or
// unsupported_polynomial.
template <class UF>
TowerPtr<UF> build_tower_chain(std::shared_ptr<const UF> base0, std::shared_ptr<const UF> v,
                               Poly<typename UF::Elem> h, long wp) {
  using VE = typename UF::Elem;

  long twist_total = 0;
  long twist_guard = -1;
  int twist_rounds = 0;

  while (true) {
    const long n = static_cast<long>(h.size()) - 1;
    if (n == 1) {
      Poly<VE> eis{v->zero(wp) - v->one(wp).shifted(1), v->one(wp)};
      return Tower<UF>::make(base0, v, std::move(eis), wp);
    }
    build_detail::require_integral(h, "descent produced a non-integral polynomial");

    if (h[0].is_prec_zero())
      throw precision_exhausted("constant term indistinguishable from zero");
    const long v0 = h[0].val();
    for (long i = 1; i < n; ++i) {
      const auto& c = h[static_cast<std::size_t>(i)];
      if (!c.is_prec_zero()) {
        if (n * c.val() < v0 * (n - i))
          throw reducible_polynomial("newton polygon has more than one slope");
      } else if (n * c.precision() < v0 * (n - i)) {
        throw precision_exhausted("newton polygon corner hidden below the working precision");
      }
    }

    const long g1 = std::gcd(v0, n);
    const long e1 = n / g1;
    const long hs = v0 / g1;
    const long sp = g1;

    auto kV = v->residue_field();
    FFPoly R;
    R.reserve(static_cast<std::size_t>(sp) + 1);
    for (long j = 0; j <= sp; ++j)
      R.push_back(build_detail::scaled_residue(h[static_cast<std::size_t>(j * e1)], (sp - j) * hs));

    auto pw = ffp_power_of_irreducible(kV, R);
    if (!pw)
      throw reducible_polynomial("residual polynomial has two distinct irreducible factors");
    const auto& phi = pw->first;
    const int d = ffp_deg(phi);

    if (d == 1 && e1 == n) {
      // Terminal: a uniformizer is theta^a pi^b with a hs + b e1 = 1.
      QuotRing<UF> A(v, h);
      bigint bx, by;
      egcd(bigint(hs), bigint(e1), bx, by);
      long a = static_cast<long>(((bx % e1 + e1) % e1).convert_to<long>());
      long b = (1 - a * hs) / e1;
      auto piL = A.shift(A.x_power(a), b);

      DepFinder<VE> dep;
      auto cur = A.one();
      Poly<VE> eis;
      for (long k = 0; k <= n; ++k) {
        auto combo = dep.add(cur);
        if (combo) {
          if (k < n) throw reducible_polynomial("uniformizer satisfies a short relation");
          eis.reserve(static_cast<std::size_t>(n) + 1);
          for (auto& c : *combo) eis.push_back(v->zero(wp) - c);
          eis.push_back(v->one(wp));
          break;
        }
        if (k == n) throw reducible_polynomial("uniformizer powers stayed independent");
        cur = A.mul(cur, piL);
      }

      if (eis[0].is_prec_zero()) {
        if (eis[0].precision() >= 2)
          throw reducible_polynomial("uniformizer norm has the wrong valuation");
        throw precision_exhausted("eisenstein constant term undetermined");
      }
      if (eis[0].val() != 1)
        throw reducible_polynomial("uniformizer norm has the wrong valuation");
      for (long i = 1; i < n; ++i) {
        const auto& c = eis[static_cast<std::size_t>(i)];
        if (c.is_prec_zero()) {
          if (c.precision() < 1)
            throw precision_exhausted("eisenstein coefficient undetermined");
        } else if (c.val() < 1) {
          throw reducible_polynomial("uniformizer minimal polynomial is not eisenstein");
        }
      }
      return Tower<UF>::make(base0, v, std::move(eis), e1 * wp);
    }

    if (d > 1) {
      // Peel: adjoin the unramified extension named by phi, then rewrite h
      // over it via the first linear relation among theta^k zhat^j.
      QuotRing<UF> A(v, h);
      auto z0 = A.shift(A.x_power(e1), -hs);
      std::vector<typename QuotRing<UF>::AElem> F;
      F.reserve(phi.size());
      for (const auto& c : phi) F.push_back(A.scalar(v->lift(c, wp)));
      auto zhat = ring_newton_root(A, F, z0);

      auto vn = UF::make(v->p(), v->degree() * d, wp);
      auto em_gen = unram_embedding_gen(v, vn);
      Poly<VE> fn;
      fn.reserve(phi.size());
      for (const auto& c : phi) fn.push_back(unram_embed(v, vn, v->lift(c, wp), em_gen));
      FFPoly fnbar;
      for (const auto& c : fn) fnbar.push_back(c.residue());
      auto rts = ffp_roots(vn->residue_field(), fnbar);
      if (rts.empty())
        throw reducible_polynomial("residual factor failed to split after base change");
      auto zeta = hensel_root(fn, vn->lift(rts[0], wp), wp);

      std::vector<typename QuotRing<UF>::AElem> zpow{A.one()};
      for (int j = 1; j < d; ++j) zpow.push_back(A.mul(zpow.back(), zhat));

      const long nn = n / d;
      DepFinder<VE> dep;
      auto xk = A.one();
      Poly<VE> hn;
      for (long k = 0; k <= nn && hn.empty(); ++k) {
        for (int j = 0; j < d; ++j) {
          auto combo = dep.add(A.mul(xk, zpow[static_cast<std::size_t>(j)]));
          if (combo) {
            if (k < nn || j != 0)
              throw reducible_polynomial("unramified generator satisfies a short relation");
            hn.reserve(static_cast<std::size_t>(nn) + 1);
            for (long k2 = 0; k2 < nn; ++k2) {
              VE acc = vn->zero(wp);
              for (int j2 = d - 1; j2 >= 0; --j2)
                acc = acc * zeta +
                      unram_embed(v, vn, (*combo)[static_cast<std::size_t>(k2 * d + j2)], em_gen);
              hn.push_back(vn->zero(wp) - acc);
            }
            hn.push_back(vn->one(wp));
            break;
          }
          if (k == nn)
            throw reducible_polynomial("generator powers stayed independent past the dimension");
        }
        if (hn.empty()) xk = A.mul_by_x(xk);
      }
      build_detail::require_integral(hn, "peeled polynomial is not integral");
      v = std::move(vn);
      h = std::move(hn);
      twist_total = 0;
      twist_guard = -1;
      twist_rounds = 0;
      continue;
    }

    if (e1 == 1) {
      // Recentre: all residue data says theta = rho + pi^hs * (unit root of
      // a fresh polynomial); Krasner caps how often this can happen.
      if (twist_guard < 0) {
        QuotRing<UF> A(v, h);
        try {
          twist_guard = det_valuation(A.mul_matrix(A.from_poly(poly_derivative(h)))) + 2;
        } catch (const singular_basis&) {
          throw reducible_polynomial("defining polynomial is not separable");
        }
      }
      FFElem rbar = kV->zero() - phi[0];
      VE rho = v->lift(rbar, wp).shifted(hs);
      auto shifted = poly_compose_linear(h, rho, v->one(wp).shifted(hs));
      Poly<VE> hn;
      hn.reserve(shifted.size());
      for (long i = 0; i <= n; ++i)
        hn.push_back(shifted[static_cast<std::size_t>(i)].shifted(-(n - i) * hs));
      build_detail::require_integral(hn, "recentred polynomial is not integral");
      h = std::move(hn);
      twist_total += hs;
      ++twist_rounds;
      if (twist_total > twist_guard || twist_rounds > 2 * twist_guard + 4)
        throw reducible_polynomial("recentring exceeded the separability bound");
      continue;
    }

    throw unsupported_polynomial(
        "residual factor is a repeated linear power with partial ramification");
  }
}

template <class UF>
struct ExtCreated {
  TowerPtr<UF> tower;
  TowerElem<UF> alpha;
};

// Builds K[x]/(g) as a certified two-step tower together with a root of g
// inside it.  The returned tower is a genuine field by construction, so the
// degree of the relation satisfied by alpha certifies that g is irreducible.
template <class UF>
ExtCreated<UF> ext_create(std::shared_ptr<const UF> base, Poly<typename UF::Elem> g) {
  using VE = typename UF::Elem;
  const long wp = base->work_prec();

  if (g.size() < 2) throw invalid_degree("defining polynomial must have degree at least 1");
  const long n = static_cast<long>(g.size()) - 1;
  if (g.back().is_prec_zero())
    throw precision_exhausted("leading coefficient indistinguishable from zero");
  if (!(g.back() - base->one(wp)).is_prec_zero()) {
    VE lead = g.back();
    for (auto& c : g) c = c / lead;
    g.back() = base->one(wp);
  }

  bool flat = true;
  for (const auto& c : poly_derivative(g))
    if (!c.is_prec_zero()) flat = false;
  if (flat)
    throw unsupported_polynomial("defining polynomial is inseparable");

  long shift = 0;
  for (long i = 0; i < n; ++i) {
    const auto& c = g[static_cast<std::size_t>(i)];
    if (!c.is_prec_zero() && c.val() < 0) shift = std::max(shift, ceil_div(-c.val(), n - i));
  }
  Poly<VE> h;
  h.reserve(g.size());
  for (long i = 0; i <= n; ++i)
    h.push_back(g[static_cast<std::size_t>(i)].shifted(shift * (n - i)));

  auto L = build_tower_chain<UF>(base, base, h, wp);
  if (L->m() != n)
    throw reducible_polynomial("constructed field has a smaller degree than the polynomial");

  // Roots are searched for the integral rescaling, whose roots are integral,
  // and then scaled back.
  Poly<TowerElem<UF>> hl;
  hl.reserve(h.size());
  for (const auto& c : h) {
    auto u = L->embed_base(c);
    hl.push_back(L->from_u(u, L->e() * u.precision()));
  }
  auto roots = tower_poly_roots(hl);
  if (roots.empty())
    throw reducible_polynomial("defining polynomial has no root in the constructed field");
  auto alpha = L->shift_base(roots[0], -shift);

  DepFinder<VE> dep;
  auto pw = L->one(L->work_prec());
  for (long k = 0; k < n; ++k) {
    if (dep.add(L->base_coords(pw)))
      throw reducible_polynomial("root satisfies a relation of lower degree");
    pw = pw * alpha;
  }
  return ExtCreated<UF>{L, alpha};
}

}  // namespace weakram
