#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "element_io.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "generator.hpp"
#include "group_module.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "padic.hpp"

namespace weakram {

struct JobSpec {
  std::string kind;
  long p = 0;
  int f = 1;
  std::string poly;
  std::string command;
  long n = 1;
  std::string element;
  long precision = 0;
  std::uint64_t seed = 0;
};

namespace pipe_detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline long to_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected an integer for ") + what + ", got \"" + s + "\"");
  }
}

inline std::uint64_t to_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected an unsigned integer for ") + what + ", got \"" +
                      s + "\"");
  }
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::pair<long, int> factor_prime_power(long q) {
  for (long d = 2; d * d <= q; ++d) {
    if (q % d != 0) continue;
    int f = 0;
    long r = q;
    while (r % d == 0) {
      r /= d;
      ++f;
    }
    if (r != 1) throw parse_error("q = " + std::to_string(q) + " is not a prime power");
    return {d, f};
  }
  return {q, 1};
}

}  // namespace pipe_detail

// Flat key=value config with [base], [extension] and [task] sections;
// '#' starts a comment, unknown keys are rejected.
inline JobSpec parse_jobspec_text(const std::string& text) {
  using pipe_detail::trim;
  JobSpec js;
  long q = 0;
  bool have_p = false;
  std::string section;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error("unterminated section header: " + line);
      section = trim(line.substr(1, line.size() - 2));
      if (section != "base" && section != "extension" && section != "task")
        throw parse_error("unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("expected key = value, got: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (section == "base") {
      if (key == "kind")
        js.kind = val;
      else if (key == "p") {
        js.p = pipe_detail::to_long(val, "p");
        have_p = true;
      } else if (key == "f")
        js.f = static_cast<int>(pipe_detail::to_long(val, "f"));
      else if (key == "q")
        q = pipe_detail::to_long(val, "q");
      else
        throw parse_error("unknown key \"" + key + "\" in [base]");
    } else if (section == "extension") {
      if (key == "poly")
        js.poly = val;
      else
        throw parse_error("unknown key \"" + key + "\" in [extension]");
    } else if (section == "task") {
      if (key == "command")
        js.command = val;
      else if (key == "n")
        js.n = pipe_detail::to_long(val, "n");
      else if (key == "element")
        js.element = val;
      else if (key == "precision")
        js.precision = pipe_detail::to_long(val, "precision");
      else if (key == "seed")
        js.seed = pipe_detail::to_u64(val, "seed");
      else
        throw parse_error("unknown key \"" + key + "\" in [task]");
    } else {
      throw parse_error("key \"" + key + "\" outside any section");
    }
  }
  if (q != 0) {
    auto [p, f] = pipe_detail::factor_prime_power(q);
    if (have_p && js.p != p)
      throw parse_error("q contradicts p in [base]");
    js.p = p;
    js.f = f;
  }
  if (js.kind != "padic" && js.kind != "laurent")
    throw parse_error("base kind must be padic or laurent");
  if (!pipe_detail::is_prime(js.p)) throw parse_error("base p must be prime");
  if (js.f < 1) throw parse_error("base residue degree must be >= 1");
  if (js.poly.empty()) throw parse_error("missing poly in [extension]");
  if (js.precision < 0) throw parse_error("precision must be positive");
  return js;
}

inline JobSpec load_jobspec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open job file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_jobspec_text(buf.str());
}

struct RunOutput {
  int exit_code = 1;
  ojson cert;
};

inline int classify_exit(const error& e) {
  if (dynamic_cast<const parse_error*>(&e)) return 3;
  if (dynamic_cast<const precision_exhausted*>(&e)) return 4;
  if (dynamic_cast<const bad_exponent*>(&e) || dynamic_cast<const not_weakly_ramified*>(&e) ||
      dynamic_cast<const not_galois*>(&e) || dynamic_cast<const not_totally_ramified*>(&e) ||
      dynamic_cast<const wild_degree*>(&e) || dynamic_cast<const not_doubly_split*>(&e) ||
      dynamic_cast<const not_normal_sylow*>(&e) || dynamic_cast<const no_complement*>(&e) ||
      dynamic_cast<const not_in_ideal*>(&e) || dynamic_cast<const reducible_polynomial*>(&e) ||
      dynamic_cast<const unsupported_polynomial*>(&e))
    return 2;
  return 1;
}

namespace pipe_detail {

// Valuation of the discriminant of the integral model of g, by the same
// rescaling rule the tower constructor applies.
template <class UF>
long disc_valuation(const std::shared_ptr<const UF>& base, const std::string& poly) {
  auto g = parse_polynomial(base, poly);
  const long m = static_cast<long>(g.size()) - 1;
  if (m < 1) throw parse_error("defining polynomial must have positive degree");
  if (m == 1) return 0;
  if (g.back().is_prec_zero())
    throw precision_exhausted("leading coefficient indistinguishable from zero");
  if (!(g.back() - base->one(base->work_prec())).is_prec_zero()) {
    auto lead = g.back();
    for (auto& c : g) c = c / lead;
  }
  long shift = 0;
  for (long i = 0; i < m; ++i) {
    const auto& c = g[static_cast<std::size_t>(i)];
    if (!c.is_prec_zero() && c.val() < 0) shift = std::max(shift, ceil_div(-c.val(), m - i));
  }
  Poly<typename UF::Elem> h;
  h.reserve(g.size());
  for (long i = 0; i <= m; ++i)
    h.push_back(g[static_cast<std::size_t>(i)].shifted(shift * (m - i)));
  Poly<typename UF::Elem> dh;
  for (long i = 1; i <= m; ++i)
    dh.push_back(base->from_int(i, base->work_prec()) * h[static_cast<std::size_t>(i)]);
  long dq = static_cast<long>(dh.size()) - 1;
  while (dq >= 0 && dh[static_cast<std::size_t>(dq)].is_prec_zero()) --dq;
  if (dq < 0)
    throw reducible_polynomial("derivative of the defining polynomial vanishes");
  const long size = m + dq;
  Mat<typename UF::Elem> s(static_cast<std::size_t>(size),
                           std::vector<typename UF::Elem>(static_cast<std::size_t>(size),
                                                          base->zero(base->work_prec())));
  for (long r = 0; r < dq; ++r)
    for (long k = 0; k <= m; ++k) s[r][r + k] = h[static_cast<std::size_t>(m - k)];
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= dq; ++k)
      s[dq + r][r + k] = dh[static_cast<std::size_t>(dq - k)];
  return det_valuation(std::move(s));
}

}  // namespace pipe_detail

// Default base-digit working precision from the discriminant of the defining
// polynomial; the tower scales it by the ramification index, so this keeps at
// least 2 v_L(disc) + e (|n|+2) + 16 digits of the maximal ideal.
template <class UF>
long bootstrap_precision(const JobSpec& js) {
  const long span = std::llabs(js.n) + 2;
  for (long prov = 48;; prov *= 2) {
    if (prov > (1L << 14))
      throw reducible_polynomial("discriminant of the defining polynomial is zero");
    try {
      auto base = UF::make(js.p, js.f, prov);
      long v = pipe_detail::disc_valuation(base, js.poly);
      return 2 * v + span + 16;
    } catch (const precision_exhausted&) {
    } catch (const singular_basis&) {
    }
  }
}

template <class UF>
RunOutput run_at(const JobSpec& js, long N) {
  auto base = UF::make(js.p, js.f, N);
  CertificateInfo info{js.command, js.kind, js.p, js.f,
                       pipe_detail::trim(js.poly), js.n, js.seed, N};
  auto g = parse_polynomial(base, js.poly);
  auto ext = static_cast<long>(g.size()) == 2
                 ? analyze_galois_tower(ext_unramified(base, 1))
                 : analyze_galois_extension(base, std::move(g));
  if (js.command == "analyze") {
    return {0, make_certificate<UF>(info, ext, nullptr, nullptr, nullptr, nullptr,
                                    ext.weakly_ramified)};
  }
  if (js.command == "construct") {
    auto res = gen_general(ext, js.n, {}, js.seed);
    return {res.cert.free_generator ? 0 : 2,
            make_certificate(info, ext, &res.trace, &res.delta, &res.cert, nullptr,
                             res.cert.free_generator)};
  }
  if (js.command == "verify") {
    if (js.element.empty()) throw parse_error("verify needs an element in [task]");
    auto delta = parse_element(ext.L, js.element);
    auto fc = gm_is_free_generator(ext, delta, js.n);
    return {fc.free_generator ? 0 : 2,
            make_certificate(info, ext, nullptr, &delta, &fc, nullptr, fc.free_generator)};
  }
  if (js.command == "assoc-order") {
    info.n = 1;
    auto res = gen_general(ext, 1, {}, js.seed);
    auto rep = gm_verify_assoc_order_theorem(ext, res.delta);
    return {rep.holds() ? 0 : 2,
            make_certificate(info, ext, &res.trace, &res.delta, &res.cert, &rep, rep.holds())};
  }
  throw parse_error("unknown command \"" + js.command + "\"");
}

template <class UF>
RunOutput run_retry(const JobSpec& js) {
  long N = js.precision > 0 ? js.precision : bootstrap_precision<UF>(js);
  try {
    return run_at<UF>(js, N);
  } catch (const precision_exhausted&) {
    return run_at<UF>(js, 2 * N);
  }
}

inline RunOutput error_output(const JobSpec& js, int code, const std::string& what) {
  ojson j;
  j["schema"] = 1;
  j["tool"] = std::string("weakram ") + weakram_version;
  j["command"] = js.command;
  j["error"] = what;
  j["verdict"] = false;
  return {code, std::move(j)};
}

inline RunOutput run_job(const JobSpec& js) {
  try {
    if (js.kind == "padic") return run_retry<PadicField>(js);
    if (js.kind == "laurent") return run_retry<LaurentField>(js);
    throw parse_error("base kind must be padic or laurent");
  } catch (const error& e) {
    return error_output(js, classify_exit(e), e.what());
  } catch (const std::exception& e) {
    return error_output(js, 1, e.what());
  }
}

}  // namespace weakram
