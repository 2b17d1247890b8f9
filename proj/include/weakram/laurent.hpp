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

class LaurentField;
using LaurentPtr = std::shared_ptr<const LaurentField>;

// Truncated Laurent series over a finite field: sum_i c[i] t^{off+i} known
// modulo t^{prec}.  Stored with c.front() and c.back() nonzero and the whole
// support strictly below prec; an empty c means "zero to the stated precision".
class LaurentElem {
 public:
  LaurentPtr field() const { return fld_; }
  long precision() const { return prec_; }
  bool is_prec_zero() const { return c_.empty(); }
  long val() const {
    if (c_.empty())
      throw precision_exhausted("valuation requested for an element with no certain digit");
    return off_;
  }
  long val_or_prec() const { return c_.empty() ? prec_ : off_; }
  LaurentElem truncated(long n) const;
  LaurentElem shifted(long k) const;  // multiply by t^k
  FFElem residue() const;
  LaurentElem frobenius(int times) const;
  bool is_zero_mod(long n) const {
    if (prec_ < n) throw precision_exhausted("zero test beyond the known precision");
    return c_.empty() || off_ >= n;
  }

  FFElem coeff(long i) const;

  std::string repr() const;

  LaurentElem operator-() const;
  friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator/(const LaurentElem& a, const LaurentElem& b);

 private:
  friend class LaurentField;
  LaurentElem(LaurentPtr fld, long off, std::vector<FFElem> c, long prec)
      : fld_(std::move(fld)), off_(off), c_(std::move(c)), prec_(prec) {}

  LaurentPtr fld_;
  long off_ = 0;
  std::vector<FFElem> c_;
  long prec_ = 0;
};

class LaurentField : public std::enable_shared_from_this<LaurentField> {
 public:
  using Elem = LaurentElem;

  static LaurentPtr make(long p, int f, long work_prec) {
    return make_with_residue(FiniteField::make(p, f), work_prec);
  }

  static LaurentPtr make_with_residue(const FFPtr& k, long work_prec) {
    if (work_prec < 1) throw invalid_degree("laurent: working precision must be >= 1");
    return LaurentPtr(new LaurentField(k, work_prec));
  }

  long p() const { return k_->p(); }
  int degree() const { return k_->degree(); }
  long work_prec() const { return work_prec_; }
  FFPtr residue_field() const { return k_; }
  FFPtr coeff_field() const { return k_; }

  LaurentElem zero(long prec) const { return canon(0, {}, prec); }
  LaurentElem one(long prec) const { return from_int(1, prec); }

  LaurentElem from_int(const bigint& v, long prec) const {
    long r = mod_reduce(v, k_->p()).convert_to<long>();
    return canon(0, {k_->from_int(r)}, prec);
  }

  LaurentElem lift(const FFElem& c, long prec) const {
    if (!c.field()->same_field(*k_))
      throw field_mismatch("laurent lift: residue element from the wrong field");
    return canon(0, {c}, prec);
  }

  // Constants are already multiplicative representatives here.
  LaurentElem teichmuller(const FFElem& c, long prec) const { return lift(c, prec); }

  LaurentElem from_coeffs(long off, std::vector<FFElem> c, long prec) const {
    return canon(off, std::move(c), prec);
  }

 private:
  LaurentField(FFPtr k, long work_prec) : k_(std::move(k)), work_prec_(work_prec) {}

  friend class LaurentElem;
  friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator/(const LaurentElem& a, const LaurentElem& b);

  LaurentElem canon(long off, std::vector<FFElem> c, long prec) const {
    long lead = 0;
    while (lead < static_cast<long>(c.size()) && c[lead].is_zero()) ++lead;
    c.erase(c.begin(), c.begin() + lead);
    off += lead;
    if (off + static_cast<long>(c.size()) > prec)
      c.resize(std::max<long>(0, prec - off));
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) off = 0;
    return LaurentElem(shared_from_this(), off, std::move(c), prec);
  }

  FFPtr k_;
  long work_prec_;
};

inline FFElem LaurentElem::coeff(long i) const {
  if (i >= prec_) throw precision_exhausted("coefficient beyond the known precision");
  if (c_.empty() || i < off_ || i >= off_ + static_cast<long>(c_.size()))
    return fld_->coeff_field()->zero();
  return c_[i - off_];
}

inline LaurentElem LaurentElem::truncated(long n) const {
  return fld_->canon(off_, c_, std::min(prec_, n));
}

inline LaurentElem LaurentElem::shifted(long k) const {
  return fld_->canon(off_ + k, c_, prec_ + k);
}

inline FFElem LaurentElem::residue() const {
  if (c_.empty()) {
    if (prec_ < 1)
      throw precision_exhausted("residue of an element known to precision 0");
    return fld_->coeff_field()->zero();
  }
  if (off_ < 0) throw bad_exponent("residue of a non-integral element");
  if (prec_ < 1) throw precision_exhausted("residue of an element known to precision 0");
  return coeff(0);
}

inline LaurentElem LaurentElem::frobenius(int times) const {
  std::vector<FFElem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(fld_->coeff_field()->frobenius(x, times));
  return fld_->canon(off_, std::move(c), prec_);
}

inline LaurentElem LaurentElem::operator-() const {
  std::vector<FFElem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return fld_->canon(off_, std::move(c), prec_);
}

inline LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
  if (a.fld_ != b.fld_) throw field_mismatch("laurent add: fields differ");
  long prec = std::min(a.prec_, b.prec_);
  if (a.c_.empty()) return b.truncated(prec);
  if (b.c_.empty()) return a.truncated(prec);
  long lo = std::min(a.off_, b.off_);
  long hi = std::max(a.off_ + static_cast<long>(a.c_.size()),
                     b.off_ + static_cast<long>(b.c_.size()));
  std::vector<FFElem> c(hi - lo, a.fld_->coeff_field()->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[a.off_ - lo + i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    c[b.off_ - lo + i] = c[b.off_ - lo + i] + b.c_[i];
  return a.fld_->canon(lo, std::move(c), prec);
}

inline LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }

inline LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
  if (a.fld_ != b.fld_) throw field_mismatch("laurent mul: fields differ");
  long prec = std::min(a.prec_ + b.val_or_prec(), b.prec_ + a.val_or_prec());
  if (a.c_.empty() || b.c_.empty()) return a.fld_->canon(0, {}, prec);
  std::vector<FFElem> c(a.c_.size() + b.c_.size() - 1, a.fld_->coeff_field()->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  }
  return a.fld_->canon(a.off_ + b.off_, std::move(c), prec);
}

inline LaurentElem operator/(const LaurentElem& a, const LaurentElem& b) {
  if (a.fld_ != b.fld_) throw field_mismatch("laurent div: fields differ");
  if (b.c_.empty())
    throw division_by_zero("laurent division by an element indistinguishable from zero");
  long vb = b.off_;
  long va = a.val_or_prec();
  long prec = std::min(a.prec_ - vb, b.prec_ + va - 2 * vb);
  long len = prec - (va - vb);
  if (a.c_.empty() || len <= 0) return a.fld_->canon(0, {}, prec);
  auto K = a.fld_->coeff_field();
  FFElem u0inv = K->inv(b.c_[0]);
  auto acoef = [&](long i) {
    return i < static_cast<long>(a.c_.size()) ? a.c_[i] : K->zero();
  };
  std::vector<FFElem> q;
  q.reserve(len);
  for (long k = 0; k < len; ++k) {
    FFElem s = acoef(k);
    for (long i = 0; i < k; ++i) {
      long j = k - i;
      if (j < static_cast<long>(b.c_.size()) && !q[i].is_zero())
        s = s - q[i] * b.c_[j];
    }
    q.push_back(s * u0inv);
  }
  return a.fld_->canon(va - vb, std::move(q), prec);
}

inline std::string LaurentElem::repr() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += " + ";
    s += "[" + fld_->coeff_field()->to_string(c_[i]) + "]*t^" +
         std::to_string(off_ + static_cast<long>(i));
  }
  if (c_.empty()) s += "0";
  s += ") + O(t^" + std::to_string(prec_) + ")";
  return s;
}

inline LaurentElem same_field_int(const LaurentElem& sample, long k) {
  return sample.field()->from_int(k, sample.field()->work_prec());
}

}  // namespace weakram
