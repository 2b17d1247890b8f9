#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "padic.hpp"
#include "poly.hpp"
#include "unram.hpp"

namespace weakram {

inline long ceil_div(long a, long b) {
  long d = a / b;
  if (d * b < a) ++d;
  return d;
}

template <class UF>
class Tower;

template <class UF>
using TowerPtr = std::shared_ptr<const Tower<UF>>;

// Element of L = U(pi) with E(pi) = 0 Eisenstein over the unramified part U:
// a vector of e coefficients in U with x = sum c_i pi^i, known modulo
// P_L^{prec} (prec in v_L units, so coefficient i is kept modulo
// pi_K^{ceil((prec-i)/e)}).  The candidate valuations e*v_U(c_i) + i are
// pairwise distinct mod e, so the minimum over coordinates is the exact
// valuation; no cross-coordinate cancellation can occur.
template <class UF>
class TowerElem {
 public:
  using UE = typename UF::Elem;

  TowerPtr<UF> tower() const { return tw_; }
  long precision() const { return prec_; }
  const std::vector<UE>& coeffs() const { return c_; }

  bool is_prec_zero() const {
    for (const auto& c : c_)
      if (!c.is_prec_zero()) return false;
    return true;
  }

  long val() const {
    bool found = false;
    long best = 0;
    const long e = tw_->e();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_prec_zero()) continue;
      long v = e * c_[i].val() + static_cast<long>(i);
      if (!found || v < best) {
        best = v;
        found = true;
      }
    }
    if (!found)
      throw precision_exhausted("valuation requested for an element with no certain digit");
    return best;
  }

  long val_or_prec() const { return is_prec_zero() ? prec_ : val(); }

  bool is_zero_mod(long n) const {
    if (prec_ < n) throw precision_exhausted("zero test beyond the known precision");
    return is_prec_zero() || val() >= n;
  }

  TowerElem truncated(long n) const { return tw_->canon(c_, std::min(prec_, n)); }

  FFElem residue() const {
    if (is_prec_zero()) {
      if (prec_ < 1) throw precision_exhausted("residue of an element known to precision 0");
      return tw_->unram()->residue_field()->zero();
    }
    if (val() < 0) throw bad_exponent("residue of a non-integral element");
    if (prec_ < 1) throw precision_exhausted("residue of an element known to precision 0");
    return c_[0].residue();
  }

  TowerElem operator-() const {
    std::vector<UE> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return tw_->canon(std::move(c), prec_);
  }

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    if (a.tw_ != b.tw_) throw field_mismatch("tower add: fields differ");
    std::vector<UE> c;
    c.reserve(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] + b.c_[i]);
    return a.tw_->canon(std::move(c), std::min(a.prec_, b.prec_));
  }

  friend TowerElem operator-(const TowerElem& a, const TowerElem& b) { return a + (-b); }

  friend TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    if (a.tw_ != b.tw_) throw field_mismatch("tower mul: fields differ");
    long target = std::min(a.prec_ + b.val_or_prec(), b.prec_ + a.val_or_prec());
    return a.tw_->reduce_and_canon(poly_mul(a.c_, b.c_), target);
  }

  friend TowerElem operator/(const TowerElem& a, const TowerElem& b) {
    if (a.tw_ != b.tw_) throw field_mismatch("tower div: fields differ");
    if (b.is_prec_zero())
      throw division_by_zero("tower division by an element indistinguishable from zero");
    long vb = b.val();
    long va = a.val_or_prec();
    long target = std::min(a.prec_ - vb, b.prec_ + va - 2 * vb);
    TowerElem bu = a.tw_->mul_pi_pow(b, -vb);
    TowerElem z = a.tw_->invert_unit(bu, std::max(b.prec_ - vb, 1L));
    return a.tw_->mul_pi_pow(a * z, -vb).truncated(target);
  }

  std::string repr() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += "; ";
      s += c_[i].repr();
    }
    return s + "] + O(pi_L^" + std::to_string(prec_) + ")";
  }

 private:
  friend class Tower<UF>;
  TowerElem(TowerPtr<UF> tw, std::vector<UE> c, long prec)
      : tw_(std::move(tw)), c_(std::move(c)), prec_(prec) {}

  TowerPtr<UF> tw_;
  std::vector<UE> c_;
  long prec_;
};

// L/K as a two-step ladder: K -> U (unramified, residue degree f_rel) ->
// L = U(pi), totally ramified of degree e with Eisenstein minimal polynomial.
// K and U are modelled by the same backend class; when f_rel = 1 the two
// pointers must coincide, and otherwise the residue field of K must be the
// subfield descriptor held by the residue field of U.
template <class UF>
class Tower : public std::enable_shared_from_this<Tower<UF>> {
 public:
  using UPtr = std::shared_ptr<const UF>;
  using UE = typename UF::Elem;
  using Elem = TowerElem<UF>;

  static TowerPtr<UF> make(UPtr base_k, UPtr u, Poly<UE> eis, long work_prec) {
    if (!base_k || !u) throw field_mismatch("tower: missing backend field");
    const long e = static_cast<long>(eis.size()) - 1;
    if (e < 1) throw invalid_degree("tower: eisenstein polynomial must have degree >= 1");
    if (u->degree() % base_k->degree() != 0)
      throw invalid_degree("tower: unramified part does not contain the base");
    const int f_rel = u->degree() / base_k->degree();
    if (f_rel == 1 && base_k != u)
      throw field_mismatch("tower: equal degrees require the same backend object");
    if (f_rel > 1 &&
        !base_k->residue_field()->same_field(*u->residue_field()->subfield(base_k->degree())))
      throw field_mismatch("tower: base residue field is not the canonical subfield");
    if (eis[e].is_prec_zero() || !(eis[e] - same_field_int(eis[e], 1)).is_prec_zero())
      throw invalid_degree("tower: eisenstein polynomial must be monic");
    if (eis[0].is_prec_zero() || eis[0].val() != 1)
      throw invalid_degree("tower: constant term must have valuation exactly 1");
    for (long i = 1; i < e; ++i)
      if (!eis[i].is_prec_zero() && eis[i].val() < 1)
        throw invalid_degree("tower: non-constant lower coefficient is a unit");
    auto tw = TowerPtr<UF>(
        new Tower(std::move(base_k), std::move(u), std::move(eis), work_prec, f_rel, e));
    const_cast<Tower*>(tw.get())->init();
    return tw;
  }

  long e() const { return e_; }
  int f_rel() const { return f_rel_; }
  long m() const { return e_ * f_rel_; }
  UPtr base() const { return base_k_; }
  UPtr unram() const { return u_; }
  long work_prec() const { return work_prec_; }
  const Poly<UE>& eisenstein() const { return eis_; }

  Elem zero(long n) const {
    std::vector<UE> c;
    c.reserve(e_);
    for (long i = 0; i < e_; ++i) c.push_back(u_->zero(ceil_div(n - i, e_)));
    return Elem(this->shared_from_this(), std::move(c), n);
  }

  Elem from_u(const UE& x, long n) const {
    auto z = zero(n);
    std::vector<UE> c = z.c_;
    c[0] = x;
    return canon(std::move(c), n);
  }

  Elem one(long n) const { return from_u(u_->one(ceil_div(n, e_)), n); }

  Elem from_int(const bigint& v, long n) const {
    return from_u(u_->from_int(v, ceil_div(n, e_)), n);
  }

  Elem pi(long n) const {
    if (e_ == 1) return from_u(u_->one(ceil_div(n, e_)).shifted(1), n);
    auto z = zero(n);
    std::vector<UE> c = z.c_;
    c[1] = u_->one(ceil_div(n - 1, e_));
    return canon(std::move(c), n);
  }

  Elem pi_pow(long k, long n) const {
    long guard = n + std::max(0L, -k) + 2 * e_;
    Elem acc = one(guard);
    if (k == 0) return acc.truncated(n);
    Elem base = k > 0 ? pi(guard) : pi_inv_->truncated(guard);
    long kk = k > 0 ? k : -k;
    while (kk > 0) {
      if (kk & 1) acc = acc * base;
      base = base * base;
      kk >>= 1;
    }
    return acc.truncated(n);
  }

  // Exact multiplication by pi^k, either sign.
  Elem mul_pi_pow(const Elem& x, long k) const {
    if (k == 0) return x;
    long n = x.precision() + k;
    if (k > 0 && k < e_) {
      std::vector<UE> conv;
      conv.reserve(static_cast<std::size_t>(e_ + k));
      for (long i = 0; i < k; ++i) conv.push_back(u_->zero(ceil_div(n - i, e_)));
      for (const auto& c : x.coeffs()) conv.push_back(c);
      return reduce_and_canon(std::move(conv), n);
    }
    return (x * pi_pow(k, x.precision() + std::max(0L, k) + 2 * e_)).truncated(n);
  }

  // Newton inversion of a valuation-zero element, correct modulo P_L^{rel}.
  Elem invert_unit(const Elem& x, long rel) const {
    if (x.is_prec_zero() || x.val() != 0)
      throw division_by_zero("invert_unit: element is not a unit");
    long guard = std::max(rel, 1L) + 2 * e_;
    const UE& c0 = x.coeffs()[0];
    Elem z = from_u(u_->one(c0.precision()) / c0, guard);
    Elem two = from_int(2, guard);
    long have = 1;
    while (have < rel) {
      have = std::min(2 * have, rel);
      z = (z * (two - x * z)).truncated(guard);
    }
    return z.truncated(std::max(rel, 1L));
  }

  Elem pi_inverse() const { return *pi_inv_; }

  // Coefficientwise multiplication by pi_K^s (exact).
  Elem shift_base(const Elem& x, long s) const {
    std::vector<UE> c;
    c.reserve(x.coeffs().size());
    for (const auto& ci : x.coeffs()) c.push_back(ci.shifted(s));
    return canon(std::move(c), x.precision() + s * e_);
  }

  // --- K <-> U coordinate bridges --------------------------------------

  UE embed_base(const UE& x) const {
    if (f_rel_ == 1) return x;
    return unram_embed(base_k_, u_, x, *wk_image_);
  }

  // Coordinates of a U element over K in the basis {W^j : j < f_rel}.
  std::vector<UE> u_to_base_coords(const UE& x) const {
    if (f_rel_ == 1) return {x};
    return unram_decompose(base_k_, u_, x, *wk_image_);
  }

  // --- L <-> K coordinates: basis {W^j pi^i}, index j*e + i -------------

  std::vector<UE> base_coords(const Elem& x) const {
    std::vector<UE> out;
    out.reserve(static_cast<std::size_t>(m()));
    std::vector<std::vector<UE>> sp;
    sp.reserve(static_cast<std::size_t>(e_));
    for (long i = 0; i < e_; ++i) sp.push_back(u_to_base_coords(x.coeffs()[i]));
    for (int j = 0; j < f_rel_; ++j)
      for (long i = 0; i < e_; ++i) out.push_back(sp[static_cast<std::size_t>(i)][j]);
    return out;
  }

  // Element with the given U-coefficients, canonicalized to an honest
  // precision no greater than n.
  Elem canon(std::vector<UE> c, long n) const {
    if (static_cast<long>(c.size()) != e_) throw dimension_mismatch("tower canon: bad length");
    long eff = n;
    for (long i = 0; i < e_; ++i)
      eff = std::min(eff, e_ * c[static_cast<std::size_t>(i)].precision() + i);
    for (long i = 0; i < e_; ++i) {
      auto& ci = c[static_cast<std::size_t>(i)];
      ci = ci.truncated(ceil_div(eff - i, e_));
    }
    return Elem(this->shared_from_this(), std::move(c), eff);
  }

  // Fold a convolution of length <= 2e-1 back below degree e via
  // pi^e = -(E - x^e), then canonicalize.
  Elem reduce_and_canon(std::vector<UE> conv, long n) const {
    for (long k = static_cast<long>(conv.size()) - 1; k >= e_; --k) {
      UE top = conv[static_cast<std::size_t>(k)];
      for (long i = 0; i < e_; ++i) {
        auto& slot = conv[static_cast<std::size_t>(k - e_ + i)];
        slot = slot - top * eis_[static_cast<std::size_t>(i)];
      }
    }
    conv.erase(conv.begin() + e_, conv.end());
    return canon(std::move(conv), n);
  }

  Elem from_base_coords(const std::vector<UE>& kc, long n) const {
    if (static_cast<long>(kc.size()) != m())
      throw dimension_mismatch("from_base_coords: wrong length");
    std::vector<UE> c;
    c.reserve(static_cast<std::size_t>(e_));
    for (long i = 0; i < e_; ++i) {
      UE acc = embed_base(kc[static_cast<std::size_t>(f_rel_ - 1) * e_ + i]);
      if (f_rel_ > 1) {
        UE w = u_->lift(u_->residue_field()->gen(), u_->work_prec());
        for (int j = f_rel_ - 2; j >= 0; --j)
          acc = acc * w + embed_base(kc[static_cast<std::size_t>(j) * e_ + i]);
      }
      c.push_back(acc);
    }
    return canon(std::move(c), n);
  }

 private:
  Tower(UPtr base_k, UPtr u, Poly<UE> eis, long work_prec, int f_rel, long e)
      : base_k_(std::move(base_k)),
        u_(std::move(u)),
        eis_(std::move(eis)),
        work_prec_(work_prec),
        f_rel_(f_rel),
        e_(e) {}

  void init() {
    if (f_rel_ > 1)
      wk_image_ = std::make_shared<UE>(unram_embedding_gen(base_k_, u_));
    // 1/pi = pi^{e-1} * (pi^e / pi_K)^{-1} / pi_K, where pi^e / pi_K is the
    // valuation-zero element with coefficients -E_i / pi_K.
    long guard = work_prec_ + 2 * e_;
    std::vector<UE> d;
    d.reserve(static_cast<std::size_t>(e_));
    for (long i = 0; i < e_; ++i) d.push_back(-(eis_[static_cast<std::size_t>(i)].shifted(-1)));
    Elem u0 = canon(std::move(d), guard);
    Elem z = invert_unit(u0, guard);
    Elem p_em1 = e_ == 1 ? one(guard) : pi_pow_nocache(e_ - 1, guard);
    pi_inv_ = std::make_shared<Elem>(shift_base(p_em1 * z, -1).truncated(work_prec_));
  }

  // pi_pow for nonnegative k only, usable before pi_inv_ exists.
  Elem pi_pow_nocache(long k, long n) const {
    Elem acc = one(n + 2 * e_);
    Elem base = pi(n + 2 * e_);
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc.truncated(n);
  }

  friend class TowerElem<UF>;

  UPtr base_k_;
  UPtr u_;
  Poly<UE> eis_;
  long work_prec_;
  int f_rel_;
  long e_;
  std::shared_ptr<UE> wk_image_;
  std::shared_ptr<TowerElem<UF>> pi_inv_;
};

template <class UF>
TowerElem<UF> same_field_int(const TowerElem<UF>& sample, long k) {
  return sample.tower()->from_int(k, sample.tower()->work_prec());
}

template <class UF>
TowerElem<UF> tower_pow(TowerElem<UF> base, long k) {
  auto tw = base.tower();
  if (k < 0) {
    base = tw->one(base.precision() + 2 * tw->e()) / base;
    k = -k;
  }
  TowerElem<UF> acc = same_field_int(base, 1);
  bool started = false;
  while (k > 0) {
    if (k & 1) {
      acc = started ? acc * base : base;
      started = true;
    }
    base = base * base;
    k >>= 1;
  }
  return started ? acc : same_field_int(base, 1);
}

}  // namespace weakram
