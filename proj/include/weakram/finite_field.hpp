#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "prng.hpp"

namespace weakram {

class FiniteField;
using FFPtr = std::shared_ptr<const FiniteField>;

// Element of F_{p^f} = F_p[w]/(modulus): coefficient vector of length f,
// entries in [0, p), ascending powers of w.
class FFElem {
 public:
  FFElem() = default;
  FFElem(FFPtr fld, std::vector<std::int32_t> coords)
      : fld_(std::move(fld)), c_(std::move(coords)) {}

  const FFPtr& field() const { return fld_; }
  const std::vector<std::int32_t>& coords() const { return c_; }

  bool is_zero() const {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  bool operator==(const FFElem& o) const;
  bool operator!=(const FFElem& o) const { return !(*this == o); }

 private:
  FFPtr fld_;
  std::vector<std::int32_t> c_;
};

// Descriptor of F_{p^f} with a fixed monic modulus over F_p.  Subfields are
// addressed by their degree over F_p; embeddings and coordinate maps for all
// divisor degrees are precomputed, so instances are immutable and safe to
// share across threads.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  // Field with the default modulus: the lexicographically smallest monic
  // irreducible (c_0, ..., c_{f-1}) of degree f over F_p.
  static FFPtr make(long p, int f) {
    return make_with_modulus(p, default_modulus(p, f));
  }

  static FFPtr make_with_modulus(long p, std::vector<std::int32_t> modulus) {
    auto fld = FFPtr(new FiniteField(p, std::move(modulus)));
    const_cast<FiniteField*>(fld.get())->init();
    return fld;
  }

  static std::vector<std::int32_t> default_modulus(long p, int f) {
    if (p < 2 || f < 1) throw invalid_degree("finite field: bad p or f");
    if (f == 1) return {0, 1};
    std::vector<std::int32_t> c(f, 0);
    while (true) {
      std::vector<std::int32_t> mod(c);
      mod.push_back(1);
      if (intpoly_irreducible(mod, p)) return mod;
      int i = f - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      if (i < 0) throw invalid_degree("finite field: no irreducible modulus");
      ++c[i];
    }
  }

  long p() const { return p_; }
  int degree() const { return f_; }
  std::int64_t card() const { return q_; }
  const std::vector<std::int32_t>& modulus() const { return modulus_; }

  bool same_field(const FiniteField& o) const {
    return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_;
  }

  // --- element construction ---

  FFElem zero() const {
    return FFElem(shared_from_this(), std::vector<std::int32_t>(f_, 0));
  }
  FFElem one() const { return from_int(1); }

  FFElem from_int(long v) const {
    std::vector<std::int32_t> c(f_, 0);
    long r = v % p_;
    if (r < 0) r += p_;
    c[0] = static_cast<std::int32_t>(r);
    return FFElem(shared_from_this(), c);
  }

  // Class of w; zero in the prime field (where the modulus is w itself).
  FFElem gen() const {
    std::vector<std::int32_t> c(f_, 0);
    if (f_ > 1) c[1] = 1;
    return FFElem(shared_from_this(), c);
  }

  FFElem from_coords(std::vector<std::int32_t> c) const {
    if (static_cast<int>(c.size()) != f_)
      throw dimension_mismatch("ff element: wrong coordinate length");
    for (auto& v : c) {
      v = static_cast<std::int32_t>(((v % p_) + p_) % p_);
    }
    return FFElem(shared_from_this(), std::move(c));
  }

  // Canonical enumeration: element k has coordinates given by the base-p
  // digits of k, least significant digit first.
  FFElem element(std::uint64_t k) const {
    std::vector<std::int32_t> c(f_, 0);
    for (int i = 0; i < f_ && k > 0; ++i) {
      c[i] = static_cast<std::int32_t>(k % static_cast<std::uint64_t>(p_));
      k /= static_cast<std::uint64_t>(p_);
    }
    return FFElem(shared_from_this(), c);
  }

  std::uint64_t index_of(const FFElem& x) const {
    check(x);
    std::uint64_t k = 0;
    for (int i = f_ - 1; i >= 0; --i)
      k = k * static_cast<std::uint64_t>(p_) + x.coords()[i];
    return k;
  }

  // --- arithmetic ---

  FFElem add(const FFElem& a, const FFElem& b) const {
    check(a);
    check(b);
    std::vector<std::int32_t> c(f_);
    for (int i = 0; i < f_; ++i) c[i] = addp(a.coords()[i], b.coords()[i]);
    return FFElem(shared_from_this(), c);
  }

  FFElem sub(const FFElem& a, const FFElem& b) const {
    check(a);
    check(b);
    std::vector<std::int32_t> c(f_);
    for (int i = 0; i < f_; ++i) c[i] = subp(a.coords()[i], b.coords()[i]);
    return FFElem(shared_from_this(), c);
  }

  FFElem neg(const FFElem& a) const { return sub(zero(), a); }

  FFElem mul(const FFElem& a, const FFElem& b) const {
    check(a);
    check(b);
    return FFElem(shared_from_this(), mulmod(a.coords(), b.coords()));
  }

  FFElem pow(const FFElem& a, std::int64_t e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    FFElem r = one(), b = a;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  FFElem inv(const FFElem& a) const {
    if (a.is_zero()) throw division_by_zero("ff inverse of zero");
    return pow(a, q_ - 2);
  }

  FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }

  // --- Frobenius, trace, normality ---

  // x^(p^times).
  FFElem frobenius(const FFElem& x, int times = 1) const {
    check(x);
    times %= f_;
    if (times < 0) times += f_;
    std::vector<std::int32_t> c = x.coords();
    for (int t = 0; t < times; ++t) c = apply_matrix(frob_, c);
    return FFElem(shared_from_this(), c);
  }

  // Trace from this field down to its subfield of degree base_degree.
  FFElem trace(const FFElem& x, int base_degree = 1) const {
    check(x);
    if (base_degree < 1 || f_ % base_degree != 0)
      throw invalid_degree("ff trace: base degree must divide f");
    FFElem s = zero();
    FFElem y = x;
    for (int k = 0; k < f_ / base_degree; ++k) {
      s = add(s, y);
      y = frobenius(y, base_degree);
    }
    return s;
  }

  // --- subfield access (degree b | f over F_p) ---

  FFPtr subfield(int b) const { return subfield_data(b).field; }

  // Image in this field of the canonical generator of F_{p^b}.
  FFElem subfield_gen_image(int b) const {
    return FFElem(shared_from_this(), subfield_data(b).gen_image);
  }

  FFElem from_subfield(const FFElem& x) const {
    int b = x.field()->degree();
    const auto& data = subfield_data(b);
    if (!x.field()->same_field(*data.field))
      throw field_mismatch("ff from_subfield: wrong subfield");
    FFElem img = zero(), wp = one();
    FFElem g(shared_from_this(), data.gen_image);
    for (int j = 0; j < b; ++j) {
      img = add(img, mul(from_int(x.coords()[j]), wp));
      wp = mul(wp, g);
    }
    return img;
  }

  // Coordinates of x in the F_{p^b}-basis {1, w, ..., w^{f/b - 1}};
  // entries are returned as elements of the subfield descriptor.
  std::vector<FFElem> subfield_coords(const FFElem& x, int b) const {
    check(x);
    const auto& data = subfield_data(b);
    std::vector<std::int32_t> a = apply_matrix(data.coord_inv, x.coords());
    std::vector<FFElem> out;
    int blocks = f_ / b;
    for (int i = 0; i < blocks; ++i) {
      std::vector<std::int32_t> sc(a.begin() + static_cast<long>(i) * b,
                                   a.begin() + static_cast<long>(i + 1) * b);
      out.push_back(FFElem(data.field, sc));
    }
    return out;
  }

  // Inverse of subfield_coords: x = sum coords[i] * w^i.
  FFElem from_subfield_coords(const std::vector<FFElem>& coords, int b) const {
    if (static_cast<int>(coords.size()) != f_ / b)
      throw dimension_mismatch("ff from_subfield_coords: wrong length");
    FFElem x = zero(), wp = one();
    for (const auto& a : coords) {
      x = add(x, mul(from_subfield(a), wp));
      wp = mul(wp, gen());
    }
    return x;
  }

  // Does x lie in the subfield of degree b?
  bool in_subfield(const FFElem& x, int b) const {
    return frobenius(x, b) == x;
  }

  // Converts x to the subfield descriptor of degree b.
  FFElem to_subfield(const FFElem& x, int b) const {
    if (!in_subfield(x, b))
      throw invalid_degree("ff to_subfield: element not in subfield");
    auto coords = subfield_coords(x, b);
    for (std::size_t i = 1; i < coords.size(); ++i)
      if (!coords[i].is_zero())
        throw invalid_degree("ff to_subfield: element not in subfield");
    return coords[0];
  }

  // Is x a normal element for F_{q^ext}/F_q with q = p^base?  Requires the
  // ambient field to be exactly F_{q^ext}: the columns of the conjugate
  // matrix are the Frobenius orbit of x written over F_q.
  bool is_normal(const FFElem& x, int ext_degree, int base_degree) const {
    check(x);
    if (ext_degree < 1 || base_degree < 1 || ext_degree * base_degree != f_)
      throw invalid_degree("ff is_normal: ambient degree must be base * ext");
    std::vector<std::vector<FFElem>> cols;
    FFElem y = x;
    for (int k = 0; k < ext_degree; ++k) {
      cols.push_back(subfield_coords(y, base_degree));
      y = frobenius(y, base_degree);
    }
    return matrix_invertible(cols);
  }

  // Seeded deterministic search for a normal element of F_{q^ext}/F_q.
  FFElem normal_basis_element(int ext_degree, int base_degree,
                              std::uint64_t seed) const {
    if (ext_degree < 1 || base_degree < 1 || ext_degree * base_degree != f_)
      throw invalid_degree("ff normal element: ambient degree mismatch");
    prng rng(seed);
    for (int tries = 0; tries < 4096; ++tries) {
      std::vector<std::int32_t> c(f_);
      for (int i = 0; i < f_; ++i)
        c[i] = static_cast<std::int32_t>(
            rng.below(static_cast<std::uint64_t>(p_)));
      FFElem x(shared_from_this(), c);
      if (!x.is_zero() && is_normal(x, ext_degree, base_degree)) return x;
    }
    throw error("ff normal element: search exhausted");
  }

  // --- printing ---

  std::string to_string(const FFElem& x) const {
    check(x);
    std::ostringstream os;
    bool first = true;
    for (int i = f_ - 1; i >= 0; --i) {
      std::int32_t c = x.coords()[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "w";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  FiniteField(long p, std::vector<std::int32_t> modulus)
      : p_(p), modulus_(std::move(modulus)) {
    if (p_ < 2) throw invalid_degree("finite field: p must be >= 2");
    f_ = static_cast<int>(modulus_.size()) - 1;
    if (f_ < 1 || modulus_[f_] != 1)
      throw invalid_degree("finite field: modulus must be monic of degree f");
    q_ = 1;
    for (int i = 0; i < f_; ++i) {
      q_ *= p_;
      if (q_ > (std::int64_t{1} << 40))
        throw invalid_degree("finite field: cardinality too large");
    }
    if (f_ > 1 && !intpoly_irreducible(modulus_, p_))
      throw reducible_polynomial("finite field: modulus is reducible");
  }

  void init() {
    frob_ = build_frobenius_matrix();
    for (int b = 1; b <= f_; ++b)
      if (f_ % b == 0) build_subfield_data(b);
  }

  struct SubfieldData {
    FFPtr field;
    std::vector<std::int32_t> gen_image;  // coords in the ambient field
    std::vector<std::vector<std::int32_t>> coord_inv;  // f x f over F_p
  };

  const SubfieldData& subfield_data(int b) const {
    auto it = subfields_.find(b);
    if (it == subfields_.end())
      throw invalid_degree("ff subfield: degree does not divide f");
    return it->second;
  }

  void check(const FFElem& x) const {
    if (!x.field()) throw field_mismatch("ff op: uninitialized element");
    if (!x.field()->same_field(*this))
      throw field_mismatch("ff op: elements of different fields");
  }

  std::int32_t addp(std::int32_t a, std::int32_t b) const {
    std::int32_t s = a + b;
    return s >= p_ ? s - static_cast<std::int32_t>(p_) : s;
  }
  std::int32_t subp(std::int32_t a, std::int32_t b) const {
    std::int32_t s = a - b;
    return s < 0 ? s + static_cast<std::int32_t>(p_) : s;
  }

  std::vector<std::int32_t> mulmod(const std::vector<std::int32_t>& a,
                                   const std::vector<std::int32_t>& b) const {
    std::vector<std::int64_t> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < f_; ++j)
        prod[i + j] += static_cast<std::int64_t>(a[i]) * b[j];
    }
    for (int k = 2 * f_ - 2; k >= f_; --k) {
      std::int64_t c = prod[k] % p_;
      if (c == 0) continue;
      for (int i = 0; i < f_; ++i) {
        prod[k - f_ + i] -= c * modulus_[i];
      }
      prod[k] = 0;
    }
    std::vector<std::int32_t> out(f_);
    for (int i = 0; i < f_; ++i) {
      std::int64_t v = prod[i] % p_;
      if (v < 0) v += p_;
      out[i] = static_cast<std::int32_t>(v);
    }
    return out;
  }

  std::vector<std::vector<std::int32_t>> build_frobenius_matrix() const {
    // Columns: (w^j)^p = (w^p)^j reduced mod the modulus.
    std::vector<std::int32_t> wp(f_, 0);
    {
      // w^p by square-and-multiply on coordinate vectors.
      std::vector<std::int32_t> base(f_, 0);
      if (f_ > 1)
        base[1] = 1;
      else
        base[0] = 0;
      std::vector<std::int32_t> acc(f_, 0);
      acc[0] = 1;
      long e = p_;
      while (e > 0) {
        if (e & 1) acc = mulmod(acc, base);
        base = mulmod(base, base);
        e >>= 1;
      }
      wp = acc;
    }
    std::vector<std::vector<std::int32_t>> m(f_,
                                             std::vector<std::int32_t>(f_, 0));
    std::vector<std::int32_t> col(f_, 0);
    col[0] = 1;
    for (int j = 0; j < f_; ++j) {
      for (int i = 0; i < f_; ++i) m[i][j] = col[i];
      col = mulmod(col, wp);
    }
    return m;
  }

  std::vector<std::int32_t> apply_matrix(
      const std::vector<std::vector<std::int32_t>>& m,
      const std::vector<std::int32_t>& v) const {
    std::vector<std::int32_t> out(f_, 0);
    for (int i = 0; i < f_; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < f_; ++j)
        s += static_cast<std::int64_t>(m[i][j]) * v[j];
      out[i] = static_cast<std::int32_t>(((s % p_) + p_) % p_);
    }
    return out;
  }

  void build_subfield_data(int b) {
    SubfieldData data;
    data.field = (b == f_) ? shared_from_this() : FiniteField::make(p_, b);
    // Canonical embedding: the enumeration-first root of the subfield
    // modulus in this field.
    const auto& smod = data.field->modulus();
    bool found = false;
    for (std::int64_t k = 0; k < q_ && !found; ++k) {
      FFElem x = element(static_cast<std::uint64_t>(k));
      FFElem acc = zero();
      FFElem xp = one();
      for (std::size_t i = 0; i < smod.size(); ++i) {
        acc = add(acc, mul(from_int(smod[i]), xp));
        xp = mul(xp, x);
      }
      if (acc.is_zero()) {
        data.gen_image = x.coords();
        found = true;
      }
    }
    if (!found) throw error("ff subfield: no embedding root found");
    // Basis change: columns are w^i * g^j for i < f/b, j < b.
    std::vector<std::vector<std::int32_t>> basis(
        f_, std::vector<std::int32_t>(f_, 0));
    FFElem g(shared_from_this(), data.gen_image);
    FFElem wi = one();
    int col = 0;
    for (int i = 0; i < f_ / b; ++i) {
      FFElem gj = wi;
      for (int j = 0; j < b; ++j) {
        for (int r = 0; r < f_; ++r) basis[r][col] = gj.coords()[r];
        gj = mul(gj, g);
        ++col;
      }
      wi = mul(wi, gen());
    }
    data.coord_inv = invert_fp_matrix(basis);
    subfields_.emplace(b, std::move(data));
  }

  std::vector<std::vector<std::int32_t>> invert_fp_matrix(
      std::vector<std::vector<std::int32_t>> m) const {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<std::int32_t>> inv(n,
                                               std::vector<std::int32_t>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw singular_basis("ff subfield basis is singular");
      std::swap(m[piv], m[col]);
      std::swap(inv[piv], inv[col]);
      std::int64_t d = invmod_long(m[col][col]);
      for (int j = 0; j < n; ++j) {
        m[col][j] = static_cast<std::int32_t>(m[col][j] * d % p_);
        inv[col][j] = static_cast<std::int32_t>(inv[col][j] * d % p_);
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        std::int64_t factor = m[r][col];
        for (int j = 0; j < n; ++j) {
          m[r][j] = static_cast<std::int32_t>(
              ((m[r][j] - factor * m[col][j]) % p_ + p_) % p_);
          inv[r][j] = static_cast<std::int32_t>(
              ((inv[r][j] - factor * inv[col][j]) % p_ + p_) % p_);
        }
      }
    }
    return inv;
  }

  std::int64_t invmod_long(std::int64_t a) const {
    // p is prime, so Fermat works.
    std::int64_t r = 1, b = ((a % p_) + p_) % p_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  bool matrix_invertible(std::vector<std::vector<FFElem>> cols) const {
    int n = static_cast<int>(cols.size());
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n && piv < 0; ++r)
        if (!cols[col][r].is_zero()) piv = r;
      if (piv < 0) return false;
      for (auto& c : cols) std::swap(c[piv], c[col]);
      FFElem d = cols[col][col];
      for (int c2 = col + 1; c2 < n; ++c2) {
        if (cols[c2][col].is_zero()) continue;
        FFElem factor = cols[c2][col] / d;
        for (int r = col; r < n; ++r)
          cols[c2][r] = cols[c2][r] - factor * cols[col][r];
      }
    }
    return true;
  }

  // --- integer polynomial helpers for the modulus search ---

  static std::vector<std::int32_t> intpoly_mulmod(
      const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b,
      const std::vector<std::int32_t>& mod, long p) {
    int n = static_cast<int>(mod.size()) - 1;
    std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        prod[i + j] += static_cast<std::int64_t>(a[i]) * b[j] % p;
    for (int k = static_cast<int>(prod.size()) - 1; k >= n; --k) {
      std::int64_t c = prod[k] % p;
      if (c != 0)
        for (int i = 0; i < n; ++i) prod[k - n + i] -= c * mod[i];
      prod[k] = 0;
    }
    std::vector<std::int32_t> out(n, 0);
    for (int i = 0; i < n; ++i)
      out[i] = static_cast<std::int32_t>(((prod[i] % p) + p) % p);
    return out;
  }

  static std::vector<std::int32_t> intpoly_xq_pow(
      const std::vector<std::int32_t>& mod, long p, int times) {
    // x^(p^times) mod the given monic polynomial.
    int n = static_cast<int>(mod.size()) - 1;
    std::vector<std::int32_t> x(n, 0);
    if (n > 1)
      x[1] = 1;
    else
      x[0] = static_cast<std::int32_t>(((-mod[0]) % p + p) % p);
    std::vector<std::int32_t> acc = x;
    for (int t = 0; t < times; ++t) {
      std::vector<std::int32_t> r(n, 0);
      r[0] = 1;
      std::vector<std::int32_t> base = acc;
      long e = p;
      while (e > 0) {
        if (e & 1) r = intpoly_mulmod(r, base, mod, p);
        base = intpoly_mulmod(base, base, mod, p);
        e >>= 1;
      }
      acc = r;
    }
    return acc;
  }

  static std::vector<std::int32_t> intpoly_gcd(std::vector<std::int32_t> a,
                                               std::vector<std::int32_t> b,
                                               long p) {
    auto strip = [](std::vector<std::int32_t>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto invp = [p](std::int64_t x) {
      std::int64_t r = 1, base = ((x % p) + p) % p, e = p - 2;
      while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
      }
      return r;
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
      // a mod b.
      std::int64_t lead_inv = invp(b.back());
      while (a.size() >= b.size()) {
        std::int64_t c = a.back() * lead_inv % p;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
          std::int64_t v = (a[off + i] - c * b[i]) % p;
          a[off + i] = static_cast<std::int32_t>((v + p) % p);
        }
        strip(a);
        if (a.empty()) break;
      }
      std::swap(a, b);
    }
    return a;
  }

  static bool intpoly_irreducible(const std::vector<std::int32_t>& mod,
                                  long p) {
    int n = static_cast<int>(mod.size()) - 1;
    if (n == 1) return true;
    // x^(p^n) == x mod h, and gcd(x^(p^(n/l)) - x, h) = 1 for prime l | n.
    auto minus_x = [&](std::vector<std::int32_t> v) {
      if (static_cast<int>(v.size()) < n) v.resize(n, 0);
      v[1] = static_cast<std::int32_t>(((v[1] - 1) % p + p) % p);
      return v;
    };
    auto all_zero = [](const std::vector<std::int32_t>& v) {
      for (auto c : v)
        if (c != 0) return false;
      return true;
    };
    if (!all_zero(minus_x(intpoly_xq_pow(mod, p, n)))) return false;
    for (int l = 2; l <= n; ++l) {
      if (n % l != 0) continue;
      bool isprime = true;
      for (int d = 2; d * d <= l; ++d)
        if (l % d == 0) isprime = false;
      if (!isprime) continue;
      auto g = intpoly_gcd(minus_x(intpoly_xq_pow(mod, p, n / l)), mod, p);
      if (g.size() != 1) return false;
    }
    return true;
  }

  long p_;
  int f_;
  std::int64_t q_;
  std::vector<std::int32_t> modulus_;
  std::vector<std::vector<std::int32_t>> frob_;
  std::map<int, SubfieldData> subfields_;
};

inline FFElem FFElem::operator+(const FFElem& o) const {
  return fld_->add(*this, o);
}
inline FFElem FFElem::operator-(const FFElem& o) const {
  return fld_->sub(*this, o);
}
inline FFElem FFElem::operator-() const { return fld_->neg(*this); }
inline FFElem FFElem::operator*(const FFElem& o) const {
  return fld_->mul(*this, o);
}
inline FFElem FFElem::operator/(const FFElem& o) const {
  return fld_->div(*this, o);
}
inline bool FFElem::operator==(const FFElem& o) const {
  if (!fld_ || !o.fld_) return !fld_ && !o.fld_;
  return fld_->same_field(*o.fld_) && c_ == o.c_;
}

}  // namespace weakram
