#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "group_module.hpp"
#include "hensel.hpp"
#include "unram.hpp"

namespace weakram {

// Everything needed to replay a generator construction deterministically.
struct ConstructionTrace {
  std::string method;
  long n = 0;
  long tame_order = 1;
  long wild_order = 1;
  long bezout_a = 0;
  long bezout_b = 1;
  int unram_steps = 1;
  std::uint64_t seed = 0;
  std::vector<long> units;
};

template <class UF>
struct GeneratorResult {
  TowerElem<UF> delta;
  FreenessCertificate cert;
  ConstructionTrace trace;
};

namespace gen_detail {

// a*pr + b*c = 1 with a in [0, c); b may be negative.
inline std::pair<long, long> bezout_pair(long c, long pr) {
  for (long a = 0; a < c; ++a)
    if ((a * pr) % c == 1 % c) return {a, (1 - a * pr) / c};
  throw bad_exponent("tame and wild orders are not coprime");
}

template <class UF>
std::vector<int> inertia_indices(const Extension<UF>& ext) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(ext.aut.size()); ++k)
    if (ext.aut[static_cast<std::size_t>(k)].frob == 0) out.push_back(k);
  return out;
}

// Different exponent of L over the fixed field of h, summed from the breaks.
template <class UF>
long subgroup_different(const Extension<UF>& ext, const std::vector<int>& h) {
  long d = 0;
  for (int k : h)
    if (k != ext.id_index) d += ext.lower_break[static_cast<std::size_t>(k)];
  return d;
}

inline std::vector<long> normalize_units(const std::vector<long>& units, long c) {
  if (static_cast<long>(units.size()) > c)
    throw parse_error("more unit coefficients than the tame degree");
  std::vector<long> out = units;
  out.resize(static_cast<std::size_t>(c), 1);
  return out;
}

// sum u_i pi_s^i for i < c, with each coefficient checked to be a unit.
template <class UF>
TowerElem<UF> tame_sum(const TowerPtr<UF>& L, const TowerElem<UF>& pi_s,
                       const std::vector<long>& units) {
  const long wp = L->work_prec();
  auto term = L->one(wp);
  auto lift0 = L->from_int(units.at(0), wp);
  if (lift0.is_prec_zero() || lift0.val() != 0)
    throw parse_error("unit coefficient is not a unit");
  auto acc = lift0;
  for (std::size_t i = 1; i < units.size(); ++i) {
    auto lift = L->from_int(units[i], wp);
    if (lift.is_prec_zero() || lift.val() != 0)
      throw parse_error("unit coefficient is not a unit");
    term = term * pi_s;
    acc = acc + lift * term;
  }
  return acc;
}

}  // namespace gen_detail

// Uniformizer of the fixed field of the subgroup h, as the trace over h of a
// monomial w^j pi^k.  The window of k covers one full residue system past the
// point where the traced ideal reaches valuation one, so a hit is guaranteed.
template <class UF>
TowerElem<UF> ext_subfield_uniformizer(const Extension<UF>& ext, const std::vector<int>& h) {
  const auto& L = ext.L;
  const long wp = L->work_prec();
  if (h.size() == 1) {
    if (h[0] != ext.id_index)
      throw theorem_violation("a one-element subgroup must be the identity");
    return L->pi(wp);
  }
  long ex = 0;
  for (int k : h)
    if (ext.aut[static_cast<std::size_t>(k)].frob == 0) ++ex;
  const long dx = gen_detail::subgroup_different(ext, h);
  auto u = L->unram();
  auto w = L->from_u(u->lift(u->residue_field()->gen(), u->work_prec()), wp);
  auto wj = L->one(wp);
  for (int j = 0; j < ext.f_rel(); ++j) {
    for (long k = ex - dx; k < ex - dx + ext.e(); ++k) {
      auto y = ext.orbit_sum(h, L->mul_pi_pow(wj, k));
      if (y.is_prec_zero()) {
        if (y.precision() <= ex)
          throw precision_exhausted("subfield trace invisible at this precision");
        continue;
      }
      if (y.val() == ex) return y;
    }
    wj = wj * w;
  }
  throw theorem_violation("no traced monomial uniformizes the fixed field");
}

template <class UF>
struct TameUniformizer {
  TowerElem<UF> pi;         // pi^c equals unit * pi_K exactly
  typename UF::Elem unit;   // monomial-lifted unit of the base field
};

// Uniformizer of the degree-c tame fixed field of h, adjusted by the unique
// residue-one c-th root so that its c-th power lands in the base field.
template <class UF>
TameUniformizer<UF> ext_tame_kummer_uniformizer(const Extension<UF>& ext,
                                                const std::vector<int>& h, long c) {
  const auto& L = ext.L;
  const long wp = L->work_prec();
  auto base = L->base();
  if (c % base->p() == 0)
    throw wild_degree("kummer normalization requires a degree prime to p");
  auto pix = ext_subfield_uniformizer(ext, h);
  auto u = L->shift_base(tower_pow(pix, c), -1);
  if (u.is_prec_zero() || u.val() != 0)
    throw theorem_violation("tame uniformizer power has the wrong valuation");
  auto r = u.residue();
  auto r0 = ext.f_rel() == 1
                ? r
                : L->unram()->residue_field()->to_subfield(r, base->residue_field()->degree());
  auto u0 = base->lift(r0, base->work_prec());
  auto gamma = L->from_u(L->embed_base(u0), wp) * L->invert_unit(u, wp);
  Poly<TowerElem<UF>> f;
  f.push_back(L->zero(wp) - gamma);
  for (long i = 1; i < c; ++i) f.push_back(L->zero(wp));
  f.push_back(L->one(wp));
  auto root = hensel_root(f, L->one(wp), wp);
  auto pis = pix * root;
  auto target = L->from_u(L->embed_base(u0.shifted(1)), wp);
  if (!(tower_pow(pis, c) - target).is_prec_zero())
    throw theorem_violation("normalized uniformizer power missed the base field");
  for (int k : h)
    if (!(ext.apply(k, pis) - pis).is_prec_zero())
      throw theorem_violation("normalized uniformizer is not fixed by the subgroup");
  return TameUniformizer<UF>{std::move(pis), std::move(u0)};
}

namespace gen_detail {

template <class UF>
int base_residue_degree(const Extension<UF>& ext) {
  return ext.L->base()->residue_field()->degree();
}

// Shared assembly for every split shape: with S = WU and T = CU,
// eps = pi_T^(nb) * pi_S^(na) * (sum u_i pi_S^i) * beta, where beta lifts a
// normal residue basis element when the extension has residue degree.
template <class UF>
GeneratorResult<UF> split_generator(const Extension<UF>& ext, const SplitData& sd, long n,
                                    const std::vector<long>& units, std::uint64_t seed,
                                    const char* method) {
  const auto& L = ext.L;
  const long wp = L->work_prec();
  const long pr = static_cast<long>(sd.W.size());
  const long c = static_cast<long>(sd.C.size());
  if (((n - 1) % pr + pr) % pr != 0)
    throw bad_exponent("the ideal exponent must be 1 modulo the wild degree");
  auto [a, b] = bezout_pair(c, pr);
  auto us = normalize_units(units, c);

  auto pis = ext_tame_kummer_uniformizer(ext, sd.S, c);
  auto pit = ext_subfield_uniformizer(ext, sd.T);
  if (pis.pi.val() != pr || pit.val() != c)
    throw theorem_violation("subfield uniformizers have unexpected valuations");
  auto eps = tower_pow(pit, n * b) * tower_pow(pis.pi, n * a) * tame_sum(L, pis.pi, us);
  if (ext.f_rel() > 1) {
    auto ru = L->unram();
    auto nb = ru->residue_field()->normal_basis_element(
        ext.f_rel(), base_residue_degree(ext), seed);
    eps = eps * L->from_u(ru->lift(nb, ru->work_prec()), wp);
  }

  GeneratorResult<UF> out{eps, gm_is_free_generator(ext, eps, n), ConstructionTrace{}};
  if (!out.cert.free_generator)
    throw theorem_violation("constructed element failed the freeness certificate");
  out.trace.method = method;
  out.trace.n = n;
  out.trace.tame_order = c;
  out.trace.wild_order = pr;
  out.trace.bezout_a = a;
  out.trace.bezout_b = b;
  out.trace.seed = seed;
  out.trace.units = std::move(us);
  return out;
}

}  // namespace gen_detail

// Unramified case: any lift of a normal residue basis element, scaled into
// the ideal by a base uniformizer power.
template <class UF>
GeneratorResult<UF> gen_unramified(const Extension<UF>& ext, long n, std::uint64_t seed) {
  if (ext.e() != 1)
    throw invalid_degree("the unramified constructor needs trivial ramification");
  const auto& L = ext.L;
  auto ru = L->unram();
  auto nb = ru->residue_field()->normal_basis_element(
      ext.f_rel(), gen_detail::base_residue_degree(ext), seed);
  auto delta = L->shift_base(L->from_u(ru->lift(nb, ru->work_prec()), L->work_prec()), n);
  GeneratorResult<UF> out{delta, gm_is_free_generator(ext, delta, n), ConstructionTrace{}};
  if (!out.cert.free_generator)
    throw theorem_violation("normal basis lift failed the freeness certificate");
  out.trace.method = "unramified";
  out.trace.n = n;
  out.trace.seed = seed;
  return out;
}

// Totally tamely ramified case: powers of a Kummer-normalized uniformizer.
template <class UF>
GeneratorResult<UF> gen_tot_tame(const Extension<UF>& ext, long n,
                                 const std::vector<long>& units) {
  if (ext.f_rel() != 1)
    throw not_totally_ramified("the tame constructor needs residue degree one");
  if (ext.e() % ext.L->base()->p() == 0)
    throw wild_degree("the tame constructor needs a degree prime to p");
  FiniteGroup g(ext.table);
  std::vector<int> all;
  for (int k = 0; k < g.order(); ++k) all.push_back(k);
  auto sd = grp_doubly_split(g, all, g.identity(), ext.L->base()->p());
  return gen_detail::split_generator(ext, sd, n, units, 0, "tot_tame");
}

// Totally ramified weak p-power case: the bare uniformizer power works.
template <class UF>
GeneratorResult<UF> gen_tot_weak_p(const Extension<UF>& ext, long n) {
  if (ext.f_rel() != 1)
    throw not_totally_ramified("the wild constructor needs residue degree one");
  if (!ext.weakly_ramified)
    throw not_weakly_ramified("the construction needs a trivial second ramification group");
  const long p = ext.L->base()->p();
  long rest = ext.e();
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw invalid_degree("the wild constructor needs a p-power degree");
  const long e = ext.e();
  if (((n - 1) % e + e) % e != 0)
    throw bad_exponent("the ideal exponent must be 1 modulo the degree");
  auto delta = ext.L->pi_pow(n, ext.L->work_prec());
  GeneratorResult<UF> out{delta, gm_is_free_generator(ext, delta, n), ConstructionTrace{}};
  if (!out.cert.free_generator)
    throw theorem_violation("uniformizer power failed the freeness certificate");
  out.trace.method = "tot_weak_p";
  out.trace.n = n;
  out.trace.wild_order = e;
  return out;
}

// Totally ramified weak case of mixed degree c * p^r.
template <class UF>
GeneratorResult<UF> gen_tot_weak(const Extension<UF>& ext, long n,
                                 const std::vector<long>& units) {
  if (ext.f_rel() != 1)
    throw not_totally_ramified("the totally ramified constructor needs residue degree one");
  if (!ext.weakly_ramified)
    throw not_weakly_ramified("the construction needs a trivial second ramification group");
  FiniteGroup g(ext.table);
  std::vector<int> all;
  for (int k = 0; k < g.order(); ++k) all.push_back(k);
  auto sd = grp_doubly_split(g, all, g.identity(), ext.L->base()->p());
  return gen_detail::split_generator(ext, sd, n, units, 0, "tot_weak");
}

// Doubly split case: both semidirect decompositions are found on the
// automorphism table, then the split assembly applies directly.
template <class UF>
GeneratorResult<UF> gen_doubly_split(const Extension<UF>& ext, long n,
                                     const std::vector<long>& units, std::uint64_t seed) {
  if (!ext.weakly_ramified)
    throw not_weakly_ramified("the construction needs a trivial second ramification group");
  FiniteGroup g(ext.table);
  int tau0 = g.identity();
  for (int k = 0; k < static_cast<int>(ext.aut.size()); ++k)
    if (ext.aut[static_cast<std::size_t>(k)].frob == 1) {
      tau0 = k;
      break;
    }
  auto sd = grp_doubly_split(g, gen_detail::inertia_indices(ext), tau0, ext.L->base()->p());
  return gen_detail::split_generator(ext, sd, n, units, seed, "doubly_split");
}

// General weakly ramified case: enlarge the unramified part until the group
// splits doubly, build there, and descend by the trace of Gal(L'/L).
template <class UF>
GeneratorResult<UF> gen_general(const Extension<UF>& ext, long n,
                                const std::vector<long>& units, std::uint64_t seed) {
  if (!ext.weakly_ramified)
    throw not_weakly_ramified("the construction needs a trivial second ramification group");
  const auto& L = ext.L;
  const int t = static_cast<int>(ext.e());
  if (t == 1) return gen_doubly_split(ext, n, units, seed);

  auto L2 = ext_enlarge_unramified(L, t);
  auto ext2 = analyze_galois_tower(L2);
  auto inner = gen_doubly_split(ext2, n, units, seed);

  std::vector<int> H;
  const int f2 = L2->f_rel();
  for (int k = 0; k < t; ++k)
    H.push_back(ext_detail::match_root(ext2.aut, ext2.sep, (k * ext.f_rel()) % f2,
                                       L2->pi(L2->work_prec())));
  auto eps2 = ext2.orbit_sum(H, inner.delta);

  auto u = L->unram();
  auto u2 = L2->unram();
  auto gi = unram_embedding_gen(u, u2);
  std::vector<typename UF::Elem> coeffs;
  coeffs.reserve(eps2.coeffs().size());
  for (const auto& c2 : eps2.coeffs()) {
    auto comp = unram_decompose(u, u2, c2, gi);
    for (std::size_t j = 1; j < comp.size(); ++j)
      if (!comp[j].is_prec_zero())
        throw theorem_violation("traced generator failed to descend to the small field");
    coeffs.push_back(std::move(comp[0]));
  }
  auto eps = L->canon(std::move(coeffs), eps2.precision());

  GeneratorResult<UF> out{eps, gm_is_free_generator(ext, eps, n), std::move(inner.trace)};
  if (!out.cert.free_generator)
    throw theorem_violation("descended element failed the freeness certificate");
  out.trace.method = "trace_descent";
  out.trace.unram_steps = t;
  return out;
}

}  // namespace weakram
