// Exact sign determination for real cyclotomic scalars.
//
// A scalar fixed by conjugation embeds to sum a_k cos(2*pi*k/N) under
// zeta_N -> exp(2*pi*i/N). The sign is decided by an exact zero test on
// the canonical representation followed by adaptive-precision interval
// refinement with MPFR directed rounding; once zero is excluded the
// refinement terminates.
#pragma once

#include <l2link/cyclotomic.hpp>

#include <mpfr.h>

namespace l2link {

namespace detail {

struct MpfrVal {
  mpfr_t v;
  explicit MpfrVal(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrVal() { mpfr_clear(v); }
  MpfrVal(const MpfrVal&) = delete;
  MpfrVal& operator=(const MpfrVal&) = delete;
};

// Adds a_k * cos(2*pi*k/N) enclosures into [lo, hi].
inline void accumulate_cos_term(mpfr_t lo, mpfr_t hi, const Rational& coeff,
                                long k, long n, mpfr_prec_t prec) {
  MpfrVal pi_lo(prec), pi_hi(prec), th_lo(prec), th_hi(prec);
  mpfr_const_pi(pi_lo.v, MPFR_RNDD);
  mpfr_const_pi(pi_hi.v, MPFR_RNDU);
  // theta = 2*pi*k/N, k >= 0
  mpfr_mul_si(th_lo.v, pi_lo.v, 2 * k, MPFR_RNDD);
  mpfr_div_si(th_lo.v, th_lo.v, n, MPFR_RNDD);
  mpfr_mul_si(th_hi.v, pi_hi.v, 2 * k, MPFR_RNDU);
  mpfr_div_si(th_hi.v, th_hi.v, n, MPFR_RNDU);

  MpfrVal c1(prec), c2(prec), c3(prec), c4(prec), w(prec);
  mpfr_cos(c1.v, th_lo.v, MPFR_RNDD);
  mpfr_cos(c2.v, th_lo.v, MPFR_RNDU);
  mpfr_cos(c3.v, th_hi.v, MPFR_RNDD);
  mpfr_cos(c4.v, th_hi.v, MPFR_RNDU);
  // |cos'| <= 1, so padding by the argument width is a valid enclosure
  mpfr_sub(w.v, th_hi.v, th_lo.v, MPFR_RNDU);
  MpfrVal clo(prec), chi(prec);
  mpfr_min(clo.v, c1.v, c3.v, MPFR_RNDD);
  mpfr_sub(clo.v, clo.v, w.v, MPFR_RNDD);
  mpfr_max(chi.v, c2.v, c4.v, MPFR_RNDU);
  mpfr_add(chi.v, chi.v, w.v, MPFR_RNDU);

  MpfrVal t_lo(prec), t_hi(prec);
  if (sgn(coeff) >= 0) {
    mpfr_mul_q(t_lo.v, clo.v, coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(t_hi.v, chi.v, coeff.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(t_lo.v, chi.v, coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(t_hi.v, clo.v, coeff.get_mpq_t(), MPFR_RNDU);
  }
  mpfr_add(lo, lo, t_lo.v, MPFR_RNDD);
  mpfr_add(hi, hi, t_hi.v, MPFR_RNDU);
}

}  // namespace detail

// Sign of a real cyclotomic scalar: -1, 0, +1. Rejects non-real input.
inline int sign_of_real(const Cyc& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational_value());
  if (!x.is_real()) throw error("sign_of_real: scalar is not real");
  long n = x.field().conductor();
  const auto& a = x.coeffs();
  for (mpfr_prec_t prec = 96; prec <= (1 << 20); prec *= 2) {
    detail::MpfrVal lo(prec), hi(prec);
    mpfr_set_zero(lo.v, 1);
    mpfr_set_zero(hi.v, 1);
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      detail::accumulate_cos_term(lo.v, hi.v, a[k], static_cast<long>(k), n, prec);
    }
    if (mpfr_sgn(lo.v) > 0) return 1;
    if (mpfr_sgn(hi.v) < 0) return -1;
  }
  throw error("sign_of_real: refinement failed to separate from zero");
}

// Compares two real cyclotomic scalars exactly.
inline int compare_real(const Cyc& x, const Cyc& y) { return sign_of_real(x - y); }

}  // namespace l2link
