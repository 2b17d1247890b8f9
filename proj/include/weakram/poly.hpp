#pragma once

#include <vector>

#include "errors.hpp"

namespace weakram {

// Dense polynomials with ascending coefficients over any coefficient type
// that supports +, -, *.  Bridging from integers to coefficients goes
// through same_field_int(sample, k), overloaded per coefficient type.

template <class E>
using Poly = std::vector<E>;

template <class E>
int poly_deg_upper(const Poly<E>& f) {
  return static_cast<int>(f.size()) - 1;
}

template <class E>
Poly<E> poly_add(const Poly<E>& a, const Poly<E>& b) {
  Poly<E> out(a.begin(), a.end());
  if (b.size() > out.size()) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
    out.insert(out.end(), b.begin() + out.size(), b.end());
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  }
  return out;
}

template <class E>
Poly<E> poly_sub(const Poly<E>& a, const Poly<E>& b) {
  Poly<E> nb;
  nb.reserve(b.size());
  for (const auto& c : b) nb.push_back(-c);
  return poly_add(a, nb);
}

template <class E>
Poly<E> poly_mul(const Poly<E>& a, const Poly<E>& b) {
  if (a.empty() || b.empty()) return {};
  // Accumulate without a synthetic zero so precision tracking stays tight.
  Poly<E> out;
  out.reserve(a.size() + b.size() - 1);
  for (std::size_t k = 0; k + 1 < a.size() + b.size(); ++k) {
    E acc = a[0] * b[0];
    bool started = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k < i || k - i >= b.size()) continue;
      E term = a[i] * b[k - i];
      acc = started ? acc + term : term;
      started = true;
    }
    out.push_back(acc);
  }
  return out;
}

template <class E>
E poly_eval(const Poly<E>& f, const E& x) {
  if (f.empty()) throw dimension_mismatch("poly_eval: empty polynomial");
  E acc = f.back();
  for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i)
    acc = acc * x + f[i];
  return acc;
}

template <class E>
Poly<E> poly_derivative(const Poly<E>& f) {
  Poly<E> out;
  for (std::size_t i = 1; i < f.size(); ++i)
    out.push_back(f[i] * same_field_int(f[i], static_cast<long>(i)));
  return out;
}

// f(c + u z) as a polynomial in z.
template <class E>
Poly<E> poly_compose_linear(const Poly<E>& f, const E& c, const E& u) {
  if (f.empty()) return {};
  Poly<E> res{f.back()};
  for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) {
    Poly<E> next(res.size() + 1, f[i]);
    for (std::size_t j = 1; j < next.size(); ++j) next[j] = res[j - 1] * u;
    for (std::size_t j = 0; j < res.size(); ++j)
      next[j] = next[j] + res[j] * c;
    res = std::move(next);
  }
  return res;
}

// Division with remainder by a monic divisor.
template <class E>
std::pair<Poly<E>, Poly<E>> poly_divrem_monic(Poly<E> a, const Poly<E>& g) {
  if (g.empty()) throw division_by_zero("poly division by zero polynomial");
  int dg = static_cast<int>(g.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < dg) return {{}, a};
  Poly<E> q(a.size() - g.size() + 1, a[0]);
  for (auto& c : q) c = c - c;  // zero of the right field
  for (int k = static_cast<int>(a.size()) - 1; k >= dg; --k) {
    E c = a[k];
    q[k - dg] = c;
    for (int i = 0; i <= dg; ++i) a[k - dg + i] = a[k - dg + i] - c * g[i];
  }
  a.erase(a.begin() + dg, a.end());
  return {q, a};
}

}  // namespace weakram
