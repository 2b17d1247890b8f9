#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "padic.hpp"
#include "poly.hpp"
#include "tower.hpp"

namespace weakram {

// Residue field elements print as polynomials in w over the prime field.
inline std::string ff_to_string(const FFElem& x) {
  const auto& c = x.coords();
  std::string s;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    std::string t;
    if (c[j] != 1 || j == 0) t = std::to_string(c[j]);
    if (j >= 1) {
      if (!t.empty()) t += "*";
      t += j == 1 ? "w" : "w^" + std::to_string(j);
    }
    if (!s.empty()) s += " + ";
    s += t;
  }
  return s.empty() ? "0" : s;
}

namespace io_detail {

inline const char* base_uniformizer_symbol(const PadicField*) { return "p"; }
inline const char* base_uniformizer_symbol(const LaurentField*) { return "t"; }

inline std::string join_term(std::vector<std::string> parts) {
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

inline void append_w_pi(std::vector<std::string>& parts, int j, long i) {
  if (j == 1) parts.push_back("w");
  if (j > 1) parts.push_back("w^" + std::to_string(j));
  if (i == 1) parts.push_back("pi");
  if (i > 1) parts.push_back("pi^" + std::to_string(i));
}

// One printed term per nonzero w-coordinate: the coordinates of a p-adic
// element in the power basis of w are honest p-adic integers times p^{-shift}.
inline void coeff_terms(const PadicElem& a, long i, std::vector<std::string>& out) {
  const bigint p = a.field()->p();
  const auto& num = a.raw_num();
  for (int j = 0; j < static_cast<int>(num.size()); ++j) {
    if (num[j] == 0) continue;
    bigint u = num[j];
    long v = 0;
    while (u % p == 0) {
      u /= p;
      ++v;
    }
    long k = v - a.raw_shift();
    std::vector<std::string> parts;
    if (k >= 0) {
      bigint whole = u * bigpow(p, k);
      if (whole != 1) parts.push_back(whole.str());
    } else {
      if (u != 1) parts.push_back(u.str());
      parts.push_back("p^" + std::to_string(k));
    }
    append_w_pi(parts, j, i);
    out.push_back(join_term(std::move(parts)));
  }
}

// One printed term per nonzero (t-exponent, w-coordinate) pair.
inline void coeff_terms(const LaurentElem& a, long i, std::vector<std::string>& out) {
  for (long k = a.val_or_prec(); k < a.precision(); ++k) {
    const auto c = a.coeff(k).coords();
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
      if (c[j] == 0) continue;
      std::vector<std::string> parts;
      if (c[j] != 1) parts.push_back(std::to_string(c[j]));
      if (k == 1) parts.push_back("t");
      if (k != 0 && k != 1) parts.push_back("t^" + std::to_string(k));
      append_w_pi(parts, j, i);
      out.push_back(join_term(std::move(parts)));
    }
  }
}

}  // namespace io_detail

// Canonical form: flattened sum of monomials coeff * (p|t)^k * w^j * pi^i with
// 0 <= i < e and 0 <= j < [U : prime field], always ending in "+ O(pi^N)".
template <class UF>
std::string print_element(const TowerElem<UF>& x) {
  std::vector<std::string> terms;
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    io_detail::coeff_terms(c[i], static_cast<long>(i), terms);
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += t;
  }
  if (s.empty()) s = "0";
  return s + " + O(pi^" + std::to_string(x.precision()) + ")";
}

template <class UF>
std::string print_element(const TowerElem<UF>& x, long display_prec) {
  return print_element(x.truncated(display_prec));
}

namespace io_detail {

struct Lexer {
  std::string src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c))
      throw parse_error(std::string("expected '") + c + "' at position " +
                        std::to_string(pos) + " in \"" + src + "\"");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  }
  bigint uint_lit() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start)
      throw parse_error("expected a number at position " + std::to_string(pos) +
                        " in \"" + src + "\"");
    return bigint(src.substr(start, pos - start));
  }
  long sint_lit() {
    long sign = eat('-') ? -1 : (eat('+'), 1);
    bigint v = uint_lit();
    if (v > 1000000) throw parse_error("exponent out of range in \"" + src + "\"");
    return sign * v.convert_to<long>();
  }
  long opt_exponent(long dflt) { return eat('^') ? sint_lit() : dflt; }
};

}  // namespace io_detail

// Grammar: element := [sign] term (sign term)* [sign 'O(pi^' INT ')'] with
// term := atom ('*' atom)* and atom := UINT | p^k | t^k | w^j | pi^i (the
// base uniformizer symbol matching the backend; exponents default to 1).
// Products are evaluated exactly; a trailing O() truncates the result.
template <class UF>
TowerElem<UF> parse_element(const TowerPtr<UF>& L, const std::string& s) {
  io_detail::Lexer lx{s};
  const long wp = L->work_prec();
  const std::string base_sym = io_detail::base_uniformizer_symbol(L->base().get());
  auto ru = L->unram();
  auto w = L->from_u(ru->lift(ru->residue_field()->gen(), ru->work_prec()), wp);

  auto sum = L->zero(wp);
  bool have_prec = false;
  long oprec = 0;
  long sign = lx.eat('-') ? -1 : 1;
  while (true) {
    if (lx.peek() == 'O') {
      lx.ident();
      lx.expect('(');
      if (lx.ident() != "pi") throw parse_error("precision marker must read O(pi^N)");
      lx.expect('^');
      oprec = lx.sint_lit();
      lx.expect(')');
      have_prec = true;
      if (!lx.done()) throw parse_error("trailing input after O() in \"" + s + "\"");
      break;
    }
    auto term = L->one(wp);
    do {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term = term * L->from_int(lx.uint_lit(), wp);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string id = lx.ident();
        if (id == base_sym) {
          term = L->shift_base(term, lx.opt_exponent(1));
        } else if (id == "pi") {
          term = L->mul_pi_pow(term, lx.opt_exponent(1));
        } else if (id == "w") {
          long j = lx.opt_exponent(1);
          if (j < 0) throw parse_error("w takes nonnegative exponents");
          for (long r = 0; r < j; ++r) term = term * w;
        } else {
          throw parse_error("unknown symbol \"" + id + "\" in \"" + s + "\"");
        }
      } else {
        throw parse_error("expected a factor at position " + std::to_string(lx.pos) +
                          " in \"" + s + "\"");
      }
    } while (lx.eat('*'));
    sum = sign > 0 ? sum + term : sum - term;
    if (lx.done()) break;
    if (lx.eat('+'))
      sign = 1;
    else if (lx.eat('-'))
      sign = -1;
    else
      throw parse_error("expected '+' or '-' at position " + std::to_string(lx.pos) +
                        " in \"" + s + "\"");
  }
  return have_prec ? sum.truncated(oprec) : sum;
}

// Polynomial over the base field: same term grammar with an extra atom
// x^k collecting the degree; no precision marker.
template <class UF>
Poly<typename UF::Elem> parse_polynomial(const std::shared_ptr<const UF>& base,
                                         const std::string& s) {
  io_detail::Lexer lx{s};
  const long wp = base->work_prec();
  const std::string base_sym = io_detail::base_uniformizer_symbol(base.get());
  auto w = base->lift(base->residue_field()->gen(), wp);

  std::vector<typename UF::Elem> coeffs;
  auto bump = [&](std::size_t deg) {
    while (coeffs.size() <= deg) coeffs.push_back(base->zero(wp));
  };
  long sign = lx.eat('-') ? -1 : 1;
  while (true) {
    auto c = base->one(wp);
    long deg = 0;
    do {
      char ch = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = c * base->from_int(lx.uint_lit(), wp);
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::string id = lx.ident();
        if (id == "x") {
          long k = lx.opt_exponent(1);
          if (k < 0) throw parse_error("x takes nonnegative exponents");
          deg += k;
        } else if (id == base_sym) {
          c = c.shifted(lx.opt_exponent(1));
        } else if (id == "w") {
          long j = lx.opt_exponent(1);
          if (j < 0) throw parse_error("w takes nonnegative exponents");
          for (long r = 0; r < j; ++r) c = c * w;
        } else {
          throw parse_error("unknown symbol \"" + id + "\" in \"" + s + "\"");
        }
      } else {
        throw parse_error("expected a factor at position " + std::to_string(lx.pos) +
                          " in \"" + s + "\"");
      }
    } while (lx.eat('*'));
    bump(static_cast<std::size_t>(deg));
    coeffs[deg] = sign > 0 ? coeffs[deg] + c : coeffs[deg] - c;
    if (lx.done()) break;
    if (lx.eat('+'))
      sign = 1;
    else if (lx.eat('-'))
      sign = -1;
    else
      throw parse_error("expected '+' or '-' at position " + std::to_string(lx.pos) +
                        " in \"" + s + "\"");
  }
  while (coeffs.size() > 1 && coeffs.back().is_prec_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace weakram
