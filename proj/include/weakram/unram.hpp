#pragma once

#include <vector>

#include "errors.hpp"
#include "hensel.hpp"
#include "laurent.hpp"
#include "padic.hpp"
#include "poly.hpp"

namespace weakram {

// Embedding machinery between nested unramified backends.  The residue field
// of the smaller field must be structurally identical to the canonical
// subfield descriptor held by the larger one; the p-adic embedding sends the
// small W to a Hensel-lifted root of its modulus, the Laurent embedding acts
// on coefficients.

inline void check_unram_nesting(const PadicPtr& sub, const PadicPtr& sup) {
  if (sub->p() != sup->p() || sup->degree() % sub->degree() != 0)
    throw invalid_degree("unram embedding: degrees are not nested");
  if (!sub->residue_field()->same_field(*sup->residue_field()->subfield(sub->degree())))
    throw field_mismatch("unram embedding: residue fields are not canonically nested");
}

inline void check_unram_nesting(const LaurentPtr& sub, const LaurentPtr& sup) {
  if (sub->p() != sup->p() || sup->degree() % sub->degree() != 0)
    throw invalid_degree("unram embedding: degrees are not nested");
  if (!sub->residue_field()->same_field(*sup->residue_field()->subfield(sub->degree())))
    throw field_mismatch("unram embedding: residue fields are not canonically nested");
}

inline PadicElem unram_embedding_gen(const PadicPtr& sub, const PadicPtr& sup) {
  check_unram_nesting(sub, sup);
  const int fk = sub->degree();
  const long wp = sup->work_prec();
  Poly<PadicElem> g;
  g.reserve(static_cast<std::size_t>(fk) + 1);
  for (int j = 0; j <= fk; ++j)
    g.push_back(sup->from_int(sub->residue_field()->modulus()[j], wp));
  auto start = sup->lift(sup->residue_field()->subfield_gen_image(fk), wp);
  return hensel_root(g, start, wp);
}

inline LaurentElem unram_embedding_gen(const LaurentPtr& sub, const LaurentPtr& sup) {
  check_unram_nesting(sub, sup);
  return sup->zero(1);  // the Laurent embedding never consults the generator
}

inline PadicElem unram_embed(const PadicPtr& sub, const PadicPtr& sup, const PadicElem& x,
                             const PadicElem& gen_image) {
  const int fk = sub->degree();
  if (fk == sup->degree() && x.field() == sup) return x;
  PadicElem acc = sup->from_int(x.raw_num()[static_cast<std::size_t>(fk) - 1],
                                gen_image.precision());
  for (int j = fk - 2; j >= 0; --j)
    acc = acc * gen_image +
          sup->from_int(x.raw_num()[static_cast<std::size_t>(j)], gen_image.precision());
  return acc.shifted(-x.raw_shift()).truncated(x.precision());
}

inline LaurentElem unram_embed(const LaurentPtr& /*sub*/, const LaurentPtr& sup,
                               const LaurentElem& x, const LaurentElem& /*gen_image*/) {
  if (x.field() == sup) return x;
  auto kU = sup->residue_field();
  long lo = x.val_or_prec();
  std::vector<FFElem> c;
  c.reserve(static_cast<std::size_t>(std::max(0L, x.precision() - lo)));
  for (long i = lo; i < x.precision(); ++i) c.push_back(kU->from_subfield(x.coeff(i)));
  return sup->from_coeffs(lo, std::move(c), x.precision());
}

// Coordinates of x over the subfield in the basis {W^j : j < degree ratio}.
inline std::vector<PadicElem> unram_decompose(const PadicPtr& sub, const PadicPtr& sup,
                                              const PadicElem& x,
                                              const PadicElem& gen_image) {
  const int fk = sub->degree();
  const int frel = sup->degree() / fk;
  if (frel == 1) return {x};
  auto kU = sup->residue_field();
  long s = 0;
  if (!x.is_prec_zero() && x.val() < 0) s = -x.val();
  PadicElem r = x.shifted(s);
  const long top = r.precision();
  std::vector<PadicElem> acc(static_cast<std::size_t>(frel), sub->zero(top));
  PadicElem w = sup->lift(kU->gen(), sup->work_prec());
  long guard = top + 2;
  while (!r.is_prec_zero() && guard-- > 0) {
    long i = r.val();
    FFElem d = r.shifted(-i).residue();
    auto sp = kU->subfield_coords(d, fk);
    PadicElem term = sup->zero(r.precision());
    for (int j = frel - 1; j >= 0; --j) {
      PadicElem kl = sub->lift(sp[static_cast<std::size_t>(j)], top - i);
      acc[static_cast<std::size_t>(j)] = acc[static_cast<std::size_t>(j)] + kl.shifted(i);
      term = term * w + unram_embed(sub, sup, kl, gen_image).shifted(i);
    }
    r = r - term;
  }
  std::vector<PadicElem> out;
  out.reserve(acc.size());
  for (auto& a : acc) out.push_back(a.shifted(-s));
  return out;
}

inline std::vector<LaurentElem> unram_decompose(const LaurentPtr& sub, const LaurentPtr& sup,
                                                const LaurentElem& x,
                                                const LaurentElem& /*gen_image*/) {
  const int fk = sub->degree();
  const int frel = sup->degree() / fk;
  if (frel == 1) return {x};
  auto kU = sup->residue_field();
  long lo = x.val_or_prec();
  std::vector<std::vector<FFElem>> cols(static_cast<std::size_t>(frel));
  for (long i = lo; i < x.precision(); ++i) {
    auto sp = kU->subfield_coords(x.coeff(i), fk);
    for (int j = 0; j < frel; ++j) cols[static_cast<std::size_t>(j)].push_back(sp[j]);
  }
  std::vector<LaurentElem> out;
  out.reserve(cols.size());
  for (auto& col : cols) out.push_back(sub->from_coeffs(lo, std::move(col), x.precision()));
  return out;
}

}  // namespace weakram
