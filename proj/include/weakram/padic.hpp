#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "finite_field.hpp"

namespace weakram {

class PadicField;
using PadicPtr = std::shared_ptr<const PadicField>;

// Element of an unramified extension of Q_p of degree f, written as
// p^{-shift} * sum_j num[j] W^j where W satisfies a fixed monic lift of the
// residue field modulus.  The element is known modulo p^{prec}; num is kept
// reduced modulo p^{prec+shift} with shift >= 0 minimal.
class PadicElem {
 public:
  PadicPtr field() const { return fld_; }
  long precision() const { return prec_; }
  bool is_prec_zero() const;
  long val() const;          // throws precision_exhausted if no digit is certain
  long val_or_prec() const;  // lower bound on the valuation
  PadicElem truncated(long n) const;
  PadicElem shifted(long k) const;  // multiply by p^k
  FFElem residue() const;
  PadicElem frobenius(int times) const;
  bool is_zero_mod(long n) const;

  std::string repr() const;  // debugging aid

  PadicElem operator-() const;
  friend PadicElem operator+(const PadicElem& a, const PadicElem& b);
  friend PadicElem operator-(const PadicElem& a, const PadicElem& b);
  friend PadicElem operator*(const PadicElem& a, const PadicElem& b);
  friend PadicElem operator/(const PadicElem& a, const PadicElem& b);

  const std::vector<bigint>& raw_num() const { return num_; }
  long raw_shift() const { return shift_; }

 private:
  friend class PadicField;
  PadicElem(PadicPtr fld, std::vector<bigint> num, long shift, long prec)
      : fld_(std::move(fld)), num_(std::move(num)), shift_(shift), prec_(prec) {}

  PadicPtr fld_;
  std::vector<bigint> num_;
  long shift_;
  long prec_;
};

class PadicField : public std::enable_shared_from_this<PadicField> {
 public:
  using Elem = PadicElem;

  // Unramified field of degree f over Q_p; all cached data (Frobenius images
  // of W) is accurate modulo p^{work_prec}.
  static PadicPtr make(long p, int f, long work_prec) {
    auto res = FiniteField::make(p, f);
    return make_with_residue(res, work_prec);
  }

  static PadicPtr make_with_residue(const FFPtr& residue, long work_prec) {
    if (work_prec < 1) throw invalid_degree("padic: working precision must be >= 1");
    auto fld = PadicPtr(new PadicField(residue, work_prec));
    const_cast<PadicField*>(fld.get())->init_frobenius();
    return fld;
  }

  long p() const { return p_; }
  int degree() const { return f_; }
  long work_prec() const { return work_prec_; }
  FFPtr residue_field() const { return residue_; }

  PadicElem zero(long prec) const { return canon(std::vector<bigint>(f_, 0), 0, prec); }
  PadicElem one(long prec) const { return from_int(1, prec); }

  PadicElem from_int(const bigint& v, long prec) const {
    std::vector<bigint> num(f_, 0);
    num[0] = v;
    return canon(std::move(num), 0, prec);
  }

  // Monomial lift of a residue field element.
  PadicElem lift(const FFElem& c, long prec) const {
    if (!c.field()->same_field(*residue_))
      throw field_mismatch("padic lift: residue element from the wrong field");
    std::vector<bigint> num(f_, 0);
    for (int j = 0; j < f_; ++j) num[j] = c.coords()[j];
    return canon(std::move(num), 0, prec);
  }

  PadicElem from_coords(std::vector<bigint> num, long shift, long prec) const {
    if (static_cast<int>(num.size()) != f_)
      throw dimension_mismatch("padic from_coords: wrong coordinate count");
    return canon(std::move(num), shift, prec);
  }

  // Multiplicative representative: the root of x^{q-1} = 1 congruent to c,
  // or zero for c = 0.
  PadicElem teichmuller(const FFElem& c, long prec) const;

  PadicElem frobenius_w(int times) const {
    int t = ((times % f_) + f_) % f_;
    return frob_w_[t];
  }

 private:
  PadicField(FFPtr residue, long work_prec)
      : p_(residue->p()),
        f_(residue->degree()),
        work_prec_(work_prec),
        residue_(std::move(residue)) {
    modulus_.assign(f_ + 1, 0);
    for (int j = 0; j < f_; ++j) modulus_[j] = residue_->modulus()[j];
    modulus_[f_] = 1;
  }

  void init_frobenius();

  friend class PadicElem;
  friend PadicElem operator+(const PadicElem& a, const PadicElem& b);
  friend PadicElem operator*(const PadicElem& a, const PadicElem& b);
  friend PadicElem operator/(const PadicElem& a, const PadicElem& b);

  PadicElem canon(std::vector<bigint> num, long shift, long prec) const {
    if (shift < 0) {
      bigint scale = bigpow(p_, -shift);
      for (auto& c : num) c *= scale;
      shift = 0;
    }
    long m = prec + shift;
    if (m <= 0) return PadicElem(shared_from_this(), std::vector<bigint>(f_, 0), 0, prec);
    bigint pm = bigpow(p_, m);
    for (auto& c : num) c = mod_reduce(c, pm);
    while (shift > 0) {
      bool all = true;
      for (const auto& c : num)
        if (c % p_ != 0) {
          all = false;
          break;
        }
      if (!all) break;
      for (auto& c : num) c /= p_;
      --shift;
    }
    bool zero = true;
    for (const auto& c : num)
      if (c != 0) {
        zero = false;
        break;
      }
    if (zero) shift = 0;
    return PadicElem(shared_from_this(), std::move(num), shift, prec);
  }

  // Product of two numerator polynomials reduced modulo the W-modulus.
  std::vector<bigint> mulmod(const std::vector<bigint>& a, const std::vector<bigint>& b) const {
    std::vector<bigint> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < f_; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int k = 2 * f_ - 2; k >= f_; --k) {
      if (prod[k] == 0) continue;
      bigint c = prod[k];
      prod[k] = 0;
      for (int j = 0; j < f_; ++j) prod[k - f_ + j] -= c * modulus_[j];
    }
    prod.resize(f_);
    return prod;
  }

  // Inverse of a unit numerator modulo p^k by Newton doubling.
  std::vector<bigint> inv_unit(const std::vector<bigint>& u, long k) const;

  long p_;
  int f_;
  long work_prec_;
  FFPtr residue_;
  std::vector<bigint> modulus_;
  std::vector<PadicElem> frob_w_;
};

inline bool PadicElem::is_prec_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

inline long PadicElem::val() const {
  if (is_prec_zero())
    throw precision_exhausted("valuation requested for an element with no certain digit");
  long best = -1;
  for (const auto& c : num_) {
    if (c == 0) continue;
    long v = padic_val(c, fld_->p());
    if (best < 0 || v < best) best = v;
  }
  return best - shift_;
}

inline long PadicElem::val_or_prec() const {
  return is_prec_zero() ? prec_ : val();
}

inline PadicElem PadicElem::truncated(long n) const {
  return fld_->canon(num_, shift_, std::min(prec_, n));
}

inline PadicElem PadicElem::shifted(long k) const {
  return fld_->canon(num_, shift_ - k, prec_ + k);
}

inline bool PadicElem::is_zero_mod(long n) const {
  if (prec_ < n)
    throw precision_exhausted("zero test beyond the known precision");
  return is_prec_zero() || val() >= n;
}

inline FFElem PadicElem::residue() const {
  if (is_prec_zero()) {
    if (prec_ < 1)
      throw precision_exhausted("residue of an element known to precision 0");
    return fld_->residue_field()->zero();
  }
  if (val() < 0) throw bad_exponent("residue of a non-integral element");
  if (prec_ < 1) throw precision_exhausted("residue of an element known to precision 0");
  std::vector<int32_t> co(fld_->degree());
  for (int j = 0; j < fld_->degree(); ++j)
    co[j] = static_cast<int32_t>(mod_reduce(num_[j], fld_->p()).convert_to<long>());
  return fld_->residue_field()->from_coords(co);
}

inline PadicElem PadicElem::operator-() const {
  std::vector<bigint> num(num_);
  for (auto& c : num) c = -c;
  return fld_->canon(std::move(num), shift_, prec_);
}

inline PadicElem operator+(const PadicElem& a, const PadicElem& b) {
  if (a.fld_ != b.fld_) throw field_mismatch("padic add: fields differ");
  long s = std::max(a.shift_, b.shift_);
  bigint sa = bigpow(a.fld_->p(), s - a.shift_);
  bigint sb = bigpow(a.fld_->p(), s - b.shift_);
  std::vector<bigint> num(a.fld_->degree());
  for (int j = 0; j < a.fld_->degree(); ++j) num[j] = a.num_[j] * sa + b.num_[j] * sb;
  return a.fld_->canon(std::move(num), s, std::min(a.prec_, b.prec_));
}

inline PadicElem operator-(const PadicElem& a, const PadicElem& b) { return a + (-b); }

inline PadicElem operator*(const PadicElem& a, const PadicElem& b) {
  if (a.fld_ != b.fld_) throw field_mismatch("padic mul: fields differ");
  long prec = std::min(a.prec_ + b.val_or_prec(), b.prec_ + a.val_or_prec());
  auto num = a.fld_->mulmod(a.num_, b.num_);
  return a.fld_->canon(std::move(num), a.shift_ + b.shift_, prec);
}

inline PadicElem operator/(const PadicElem& a, const PadicElem& b) {
  if (a.fld_ != b.fld_) throw field_mismatch("padic div: fields differ");
  if (b.is_prec_zero())
    throw division_by_zero("padic division by an element indistinguishable from zero");
  long vb = b.val();
  long va = a.val_or_prec();
  long prec = std::min(a.prec_ - vb, b.prec_ + va - 2 * vb);
  long m = vb + b.shift_;
  std::vector<bigint> bu(b.num_);
  bigint pm = bigpow(b.fld_->p(), m);
  for (auto& c : bu) c /= pm;
  long k = std::max<long>(1, prec - va + vb + 2);
  auto inv = a.fld_->inv_unit(bu, k);
  auto num = a.fld_->mulmod(a.num_, inv);
  return a.fld_->canon(std::move(num), a.shift_ + vb, prec);
}

inline std::vector<bigint> PadicField::inv_unit(const std::vector<bigint>& u, long k) const {
  FFElem r0 = canon(u, 0, 1).residue();
  FFElem r0inv = residue_->inv(r0);
  std::vector<bigint> z(f_, 0);
  for (int j = 0; j < f_; ++j) z[j] = r0inv.coords()[j];
  long have = 1;
  while (have < k) {
    have = std::min(2 * have, k);
    bigint pm = bigpow(p_, have);
    auto uz = mulmod(u, z);
    uz[0] -= 2;
    for (auto& c : uz) c = -mod_reduce(c, pm);
    z = mulmod(z, uz);
    for (auto& c : z) c = mod_reduce(c, pm);
  }
  return z;
}

inline PadicElem PadicField::teichmuller(const FFElem& c, long prec) const {
  if (!c.field()->same_field(*residue_))
    throw field_mismatch("teichmuller: residue element from the wrong field");
  if (c.is_zero()) return zero(prec);
  bigint qm1 = bigpow(p_, f_) - 1;
  PadicElem z = lift(c, prec);
  PadicElem qm1e = from_int(qm1, prec);
  auto powm = [&](const PadicElem& base, bigint e) {
    PadicElem acc = one(prec);
    PadicElem sq = base;
    while (e > 0) {
      if (e % 2 == 1) acc = acc * sq;
      sq = sq * sq;
      e /= 2;
    }
    return acc;
  };
  long have = 1;
  while (have < prec) {
    PadicElem fz = powm(z, qm1) - one(prec);
    PadicElem dfz = qm1e * powm(z, qm1 - 1);
    z = z - fz / dfz;
    have *= 2;
  }
  return z.truncated(prec);
}

inline void PadicField::init_frobenius() {
  // Newton-lift W to the root of the modulus whose residue is w^p, then
  // iterate to fill every Frobenius power.
  auto eval_mod = [&](const PadicElem& x) {
    PadicElem acc = from_int(modulus_[f_], x.precision());
    for (int j = f_ - 1; j >= 0; --j) acc = acc * x + from_int(modulus_[j], x.precision());
    return acc;
  };
  auto eval_dmod = [&](const PadicElem& x) {
    PadicElem acc = from_int(bigint(f_) * modulus_[f_], x.precision());
    for (int j = f_ - 1; j >= 1; --j)
      acc = acc * x + from_int(bigint(j) * modulus_[j], x.precision());
    return acc;
  };
  frob_w_.clear();
  if (f_ == 1) {
    frob_w_.push_back(from_int(0, work_prec_));
    return;
  }
  std::vector<bigint> wnum(f_, 0);
  wnum[1] = 1;
  frob_w_.push_back(canon(wnum, 0, work_prec_));
  FFElem w = residue_->gen();
  PadicElem z = lift(residue_->frobenius(w, 1), work_prec_);
  long have = 1;
  while (have < work_prec_) {
    z = z - eval_mod(z) / eval_dmod(z);
    have *= 2;
  }
  z = z.truncated(work_prec_);
  frob_w_.push_back(z);
  for (int t = 2; t < f_; ++t) {
    // Horner evaluation of the previous image's coordinates at frob_w_[1].
    const PadicElem& prev = frob_w_[t - 1];
    PadicElem acc = from_int(prev.raw_num()[f_ - 1], work_prec_);
    for (int j = f_ - 2; j >= 0; --j)
      acc = acc * frob_w_[1] + from_int(prev.raw_num()[j], work_prec_);
    frob_w_.push_back(acc.shifted(-prev.raw_shift()).truncated(work_prec_));
  }
}

inline PadicElem PadicElem::frobenius(int times) const {
  int t = ((times % fld_->degree()) + fld_->degree()) % fld_->degree();
  if (t == 0) return *this;
  const PadicElem fw = fld_->frobenius_w(t);
  PadicElem acc = fld_->from_int(num_[fld_->degree() - 1], fw.precision());
  for (int j = fld_->degree() - 2; j >= 0; --j)
    acc = acc * fw + fld_->from_int(num_[j], fw.precision());
  return acc.shifted(-shift_).truncated(prec_);
}

inline std::string PadicElem::repr() const {
  std::string s = "[";
  for (int j = 0; j < fld_->degree(); ++j) {
    if (j) s += ", ";
    s += num_[j].str();
  }
  s += "] * " + std::to_string(fld_->p()) + "^-" + std::to_string(shift_) +
       " + O(" + std::to_string(fld_->p()) + "^" + std::to_string(prec_) + ")";
  return s;
}

inline PadicElem same_field_int(const PadicElem& sample, long k) {
  return sample.field()->from_int(k, sample.field()->work_prec());
}

}  // namespace weakram
