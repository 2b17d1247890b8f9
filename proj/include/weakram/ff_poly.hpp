#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"

namespace weakram {

// Dense polynomials over a finite field, ascending coefficients.
using FFPoly = std::vector<FFElem>;

inline FFPoly ffp_trim(FFPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

inline int ffp_deg(const FFPoly& f) { return static_cast<int>(f.size()) - 1; }

inline bool ffp_is_zero(const FFPoly& f) {
  for (const auto& c : f)
    if (!c.is_zero()) return false;
  return true;
}

inline FFPoly ffp_sub(const FFPoly& a, const FFPoly& b) {
  FFPoly out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i < out.size())
      out[i] = out[i] - b[i];
    else
      out.push_back(-b[i]);
  }
  return ffp_trim(std::move(out));
}

inline FFPoly ffp_mul(const FFPtr& F, const FFPoly& a, const FFPoly& b) {
  if (a.empty() || b.empty()) return {};
  FFPoly out(a.size() + b.size() - 1, F->zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return ffp_trim(std::move(out));
}

inline std::pair<FFPoly, FFPoly> ffp_divrem(const FFPtr& F, FFPoly a, FFPoly g) {
  g = ffp_trim(std::move(g));
  if (g.empty()) throw division_by_zero("ffp_divrem: division by zero polynomial");
  a = ffp_trim(std::move(a));
  int dg = ffp_deg(g);
  if (ffp_deg(a) < dg) return {{}, a};
  FFElem lead_inv = F->inv(g.back());
  FFPoly q(a.size() - g.size() + 1, F->zero());
  for (int k = ffp_deg(a); k >= dg; --k) {
    FFElem c = a[k] * lead_inv;
    if (!c.is_zero()) {
      q[k - dg] = c;
      for (int i = 0; i <= dg; ++i) a[k - dg + i] = a[k - dg + i] - c * g[i];
    }
    a.pop_back();
  }
  return {ffp_trim(std::move(q)), ffp_trim(std::move(a))};
}

inline FFPoly ffp_mod(const FFPtr& F, FFPoly a, const FFPoly& g) {
  return ffp_divrem(F, std::move(a), g).second;
}

inline FFPoly ffp_monic(const FFPtr& F, FFPoly f) {
  f = ffp_trim(std::move(f));
  if (f.empty()) return f;
  FFElem inv = F->inv(f.back());
  for (auto& c : f) c = c * inv;
  return f;
}

inline FFPoly ffp_gcd(const FFPtr& F, FFPoly a, FFPoly b) {
  a = ffp_trim(std::move(a));
  b = ffp_trim(std::move(b));
  while (!b.empty()) {
    auto r = ffp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return ffp_monic(F, std::move(a));
}

inline FFElem ffp_eval(const FFPtr& F, const FFPoly& f, const FFElem& x) {
  FFElem acc = F->zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

inline FFPoly ffp_derivative(const FFPtr& F, const FFPoly& f) {
  FFPoly out;
  for (std::size_t i = 1; i < f.size(); ++i)
    out.push_back(f[i] * F->from_int(static_cast<long>(i % static_cast<std::size_t>(F->p()))));
  return ffp_trim(std::move(out));
}

// x^(q^steps) modulo g, by repeated q-power ladders.
inline FFPoly ffp_xq_pow(const FFPtr& F, const FFPoly& g, int steps) {
  FFPoly x{F->zero(), F->one()};
  FFPoly acc = ffp_mod(F, x, g);
  for (int s = 0; s < steps; ++s) {
    std::int64_t e = F->card();
    FFPoly result{F->one()};
    FFPoly sq = acc;
    while (e > 0) {
      if (e & 1) result = ffp_mod(F, ffp_mul(F, result, sq), g);
      sq = ffp_mod(F, ffp_mul(F, sq, sq), g);
      e >>= 1;
    }
    acc = std::move(result);
  }
  return acc;
}

inline bool ffp_is_irreducible(const FFPtr& F, FFPoly f) {
  f = ffp_monic(F, std::move(f));
  int n = ffp_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  FFPoly x{F->zero(), F->one()};
  auto xqn = ffp_xq_pow(F, f, n);
  if (!ffp_sub(xqn, x).empty()) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    auto xq = ffp_xq_pow(F, f, n / l);
    auto g = ffp_gcd(F, ffp_sub(xq, x), f);
    if (ffp_deg(g) != 0) return false;
  }
  return true;
}

inline std::vector<FFElem> ffp_roots(const FFPtr& F, const FFPoly& f) {
  std::vector<FFElem> out;
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(F->card()); ++k) {
    FFElem x = F->element(k);
    if (ffp_eval(F, f, x).is_zero()) out.push_back(x);
  }
  return out;
}

// Decides whether f = c * phi^s for one monic irreducible phi, returning
// (phi, s); empty when f has two distinct irreducible factors.
inline std::optional<std::pair<FFPoly, int>> ffp_power_of_irreducible(const FFPtr& F,
                                                                      FFPoly f) {
  f = ffp_monic(F, std::move(f));
  if (ffp_deg(f) < 1) return std::nullopt;
  int mult = 1;
  const long p = F->p();
  while (true) {
    auto df = ffp_derivative(F, f);
    if (!ffp_is_zero(df)) break;
    // f = S(y^p); replace f by the coefficientwise p-th root of S.
    FFPoly s;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p))
      s.push_back(F->frobenius(f[i], F->degree() - 1));
    f = std::move(s);
    mult *= static_cast<int>(p);
    if (ffp_deg(f) < 1) return std::nullopt;
  }
  auto sf = ffp_divrem(F, f, ffp_gcd(F, f, ffp_derivative(F, f))).first;
  sf = ffp_monic(F, std::move(sf));
  if (!ffp_is_irreducible(F, sf)) return std::nullopt;
  int k = 0;
  FFPoly rest = f;
  while (ffp_deg(rest) > 0) {
    auto [q, r] = ffp_divrem(F, rest, sf);
    if (!ffp_is_zero(r)) return std::nullopt;
    rest = std::move(q);
    ++k;
  }
  return std::make_pair(sf, k * mult);
}

}  // namespace weakram
