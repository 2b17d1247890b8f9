#pragma once

#include "errors.hpp"
#include "poly.hpp"

namespace weakram {

// Newton criterion v(f(x)) > 2 v(f'(x)) at the starting point; a start whose
// f-value is indistinguishable from zero already counts as a root.
template <class E>
bool newton_applicable(const Poly<E>& f, const E& x) {
  E fx = poly_eval(f, x);
  if (fx.is_prec_zero()) return true;
  E dfx = poly_eval(poly_derivative(f), x);
  if (dfx.is_prec_zero()) return false;
  return fx.val() > 2 * dfx.val();
}

// Newton iteration from a start satisfying the criterion; returns the root
// refined until the correction drops below absolute precision `target`.
template <class E>
E hensel_root(const Poly<E>& f, E x, long target, int max_iter = 256) {
  Poly<E> df = poly_derivative(f);
  {
    E fx = poly_eval(f, x);
    if (fx.is_prec_zero()) return x;
    E dfx = poly_eval(df, x);
    if (dfx.is_prec_zero() || fx.val() <= 2 * dfx.val())
      throw hensel_failure("newton criterion fails at the starting point");
  }
  for (int it = 0; it < max_iter; ++it) {
    E fx = poly_eval(f, x);
    if (fx.is_prec_zero()) return x;
    E dfx = poly_eval(df, x);
    if (dfx.is_prec_zero())
      throw hensel_failure("derivative lost all precision during newton iteration");
    E corr = fx / dfx;
    if (corr.is_prec_zero()) return x;
    x = x - corr;
    if (corr.val() >= target) return x;
  }
  throw hensel_failure("newton iteration did not converge");
}

}  // namespace weakram
