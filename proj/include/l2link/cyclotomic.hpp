// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced
// modulo the N-th cyclotomic polynomial, so equality is coefficient-wise.
// The conductor is forced to be a multiple of 4: the field then contains
// i = z^(N/4) and every root of unity of conductor dividing N, which is
// all the scalar arithmetic the linking-form pipeline needs.
//
// Complex conjugation is the field automorphism z -> z^(N-1).
#pragma once

#include <l2link/rational.hpp>

#include <map>
#include <memory>
#include <numeric>
#include <sstream>

namespace l2link {

namespace detail {

using QPoly = std::vector<Rational>;  // dense, index = degree

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  qp_trim(c);
  return c;
}

// Exact division, throws if the remainder is nonzero.
inline QPoly qp_divexact(QPoly num, const QPoly& den) {
  if (den.empty()) throw error("division by zero polynomial");
  QPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0,
          Rational(0));
  while (num.size() >= den.size()) {
    Rational f = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    qp_trim(num);
    if (!num.empty() && num.size() >= den.size() && num.back() == 0)
      throw error("internal: division stall");
  }
  if (!num.empty()) throw error("internal: inexact polynomial division");
  return q;
}

inline QPoly cyclotomic_polynomial(long n, std::map<long, QPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  QPoly num(static_cast<size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;  // x^n - 1
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = qp_divexact(num, cyclotomic_polynomial(d, memo));
  memo[n] = num;
  return num;
}

}  // namespace detail

class FieldContext {
 public:
  FieldContext() = default;  // null context: plain rational scalars

  explicit FieldContext(long conductor) {
    if (conductor < 4 || conductor % 4 != 0)
      throw error("conductor must be a positive multiple of 4, got " +
                  std::to_string(conductor));
    auto d = std::make_shared<Data>();
    d->n = conductor;
    d->phi = euler_phi(conductor);
    std::map<long, detail::QPoly> memo;
    detail::QPoly cyc = detail::cyclotomic_polynomial(conductor, memo);
    // t^phi = -(c_0 + c_1 t + ... + c_{phi-1} t^{phi-1}), Phi_N monic
    d->red.resize(static_cast<size_t>(d->phi) - 1);
    std::vector<Rational> top(static_cast<size_t>(d->phi));
    for (long i = 0; i < d->phi; ++i) top[static_cast<size_t>(i)] = -cyc[static_cast<size_t>(i)];
    d->red[0] = top;
    for (size_t e = 1; e + 1 < d->red.size() + 1 && e < d->red.size(); ++e) {
      // t^{phi+e} = t * t^{phi+e-1}
      const auto& prev = d->red[e - 1];
      std::vector<Rational> cur(static_cast<size_t>(d->phi), Rational(0));
      for (long i = 0; i + 1 < d->phi; ++i) cur[static_cast<size_t>(i) + 1] = prev[static_cast<size_t>(i)];
      Rational carry = prev[static_cast<size_t>(d->phi - 1)];
      if (carry != 0)
        for (long i = 0; i < d->phi; ++i) cur[static_cast<size_t>(i)] += carry * top[static_cast<size_t>(i)];
      d->red[e] = cur;
    }
    // zeta^j in the power basis for every j in [0, N)
    d->zrep.resize(static_cast<size_t>(d->n));
    std::vector<Rational> cur(static_cast<size_t>(d->phi), Rational(0));
    cur[0] = 1;
    d->zrep[0] = cur;
    for (long j = 1; j < d->n; ++j) {
      // multiply by t with reduction
      std::vector<Rational> nxt(static_cast<size_t>(d->phi), Rational(0));
      for (long i = 0; i + 1 < d->phi; ++i) nxt[static_cast<size_t>(i) + 1] = cur[static_cast<size_t>(i)];
      Rational carry = cur[static_cast<size_t>(d->phi - 1)];
      if (carry != 0)
        for (long i = 0; i < d->phi; ++i) nxt[static_cast<size_t>(i)] += carry * top[static_cast<size_t>(i)];
      d->zrep[static_cast<size_t>(j)] = nxt;
      cur = nxt;
    }
    d_ = std::move(d);
  }

  bool null() const { return !d_; }
  long conductor() const { return d_ ? d_->n : 0; }
  long degree() const { return d_ ? d_->phi : 1; }

  const std::vector<Rational>& power_reduction(long e) const {
    // representation of t^e for e in [phi, 2*phi-2]
    return d_->red[static_cast<size_t>(e - d_->phi)];
  }
  const std::vector<Rational>& zeta_rep(long j) const {
    long n = d_->n;
    long m = ((j % n) + n) % n;
    return d_->zrep[static_cast<size_t>(m)];
  }

  bool same(const FieldContext& o) const {
    if (null() && o.null()) return true;
    if (null() || o.null()) return false;
    return d_->n == o.d_->n;
  }

 private:
  struct Data {
    long n = 0, phi = 0;
    std::vector<std::vector<Rational>> red;   // t^(phi+k) mod Phi_N
    std::vector<std::vector<Rational>> zrep;  // zeta^j in power basis
  };
  std::shared_ptr<const Data> d_;
};

// A scalar in Q(zeta_N); with a null context it is a plain rational.
class Cyc {
 public:
  Cyc() : a_(1, Rational(0)) {}
  Cyc(long v) : a_(1, Rational(v)) {}          // NOLINT: implicit by design
  Cyc(const Rational& v) : a_(1, v) {}         // NOLINT
  Cyc(FieldContext K, std::vector<Rational> a) : K_(std::move(K)), a_(std::move(a)) {
    if (!K_.null() && static_cast<long>(a_.size()) != K_.degree())
      throw error("coefficient vector has wrong length");
  }

  static Cyc zero(const FieldContext& K) {
    return K.null() ? Cyc() : Cyc(K, std::vector<Rational>(static_cast<size_t>(K.degree()), Rational(0)));
  }
  static Cyc one(const FieldContext& K) {
    Cyc c = zero(K);
    c.a_[0] = 1;
    return c;
  }
  static Cyc from_rational(const FieldContext& K, const Rational& r) {
    Cyc c = zero(K);
    c.a_[0] = r;
    return c;
  }
  static Cyc zeta(const FieldContext& K, long j) {
    if (K.null()) throw error("zeta requires a field context");
    return Cyc(K, K.zeta_rep(j));
  }
  static Cyc i(const FieldContext& K) { return zeta(K, K.conductor() / 4); }

  const FieldContext& field() const { return K_; }
  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t k = 1; k < a_.size(); ++k)
      if (a_[k] != 0) return false;
    return true;
  }
  const Rational& rational_value() const {
    if (!is_rational()) throw error("scalar is not rational");
    return a_[0];
  }
  const std::vector<Rational>& coeffs() const { return a_; }

  friend Cyc operator+(const Cyc& x, const Cyc& y) {
    auto [a, b, K] = align(x, y);
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return Cyc(K, std::move(a));
  }
  friend Cyc operator-(const Cyc& x, const Cyc& y) {
    auto [a, b, K] = align(x, y);
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return Cyc(K, std::move(a));
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Cyc operator*(const Cyc& x, const Cyc& y) {
    auto [a, b, K] = align(x, y);
    if (K.null()) return Cyc(a[0] * b[0]);
    long phi = K.degree();
    std::vector<Rational> conv(static_cast<size_t>(2 * phi - 1), Rational(0));
    for (long i = 0; i < phi; ++i) {
      if (a[static_cast<size_t>(i)] == 0) continue;
      for (long j = 0; j < phi; ++j) {
        if (b[static_cast<size_t>(j)] == 0) continue;
        conv[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
      }
    }
    std::vector<Rational> res(conv.begin(), conv.begin() + phi);
    for (long e = phi; e <= 2 * phi - 2; ++e) {
      const Rational& c = conv[static_cast<size_t>(e)];
      if (c == 0) continue;
      const auto& rep = K.power_reduction(e);
      for (long k = 0; k < phi; ++k) res[static_cast<size_t>(k)] += c * rep[static_cast<size_t>(k)];
    }
    return Cyc(K, std::move(res));
  }
  friend Cyc operator/(const Cyc& x, const Cyc& y) { return x * y.inverse(); }

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  friend bool operator==(const Cyc& x, const Cyc& y) {
    auto [a, b, K] = align(x, y);
    return a == b;
  }
  friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

  // Complex conjugation: zeta -> zeta^{-1} plus rational coefficients fixed.
  Cyc conj() const {
    if (K_.null()) return *this;
    long n = K_.conductor();
    std::vector<Rational> res(a_.size(), Rational(0));
    res[0] = a_[0];
    for (size_t k = 1; k < a_.size(); ++k) {
      if (a_[k] == 0) continue;
      const auto& rep = K_.zeta_rep(n - static_cast<long>(k));
      for (size_t j = 0; j < res.size(); ++j) res[j] += a_[k] * rep[j];
    }
    return Cyc(K_, std::move(res));
  }
  bool is_real() const { return conj() == *this; }

  Cyc inverse() const {
    if (is_zero()) throw error("division by zero scalar");
    if (K_.null() || is_rational()) {
      Cyc r = zero(K_);
      r.a_[0] = Rational(1) / a_[0];
      return r;
    }
    // extended Euclid in Q[x] against Phi_N (irreducible over Q)
    std::map<long, detail::QPoly> memo;
    detail::QPoly phi_poly = detail::cyclotomic_polynomial(K_.conductor(), memo);
    detail::QPoly r0 = phi_poly, r1(a_.begin(), a_.end());
    detail::qp_trim(r1);
    detail::QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
      // r0 = q*r1 + r2
      detail::QPoly q, r2 = r0;
      q.assign(r2.size() > r1.size() - 1 ? r2.size() - r1.size() + 1 : 1, Rational(0));
      while (r2.size() >= r1.size() && !r2.empty()) {
        Rational f = r2.back() / r1.back();
        size_t shift = r2.size() - r1.size();
        q[shift] += f;
        for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= f * r1[i];
        detail::qp_trim(r2);
      }
      detail::QPoly s2 = s0;  // s2 = s0 - q*s1
      {
        detail::QPoly qs = detail::qp_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        detail::qp_trim(s2);
      }
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant gcd; inverse = s0 / r0 reduced mod Phi
    if (r0.size() != 1) throw error("internal: cyclotomic inverse failed");
    std::vector<Rational> res(static_cast<size_t>(K_.degree()), Rational(0));
    for (size_t i = 0; i < s0.size() && i < res.size(); ++i) res[i] = s0[i] / r0[0];
    // s0 has degree < phi since deg(a) < phi
    return Cyc(K_, std::move(res));
  }

  Cyc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc r = one(K_), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Canonical text form: rational, or a z-polynomial like "1/2*z3 - 2".
  std::string to_string() const {
    if (is_rational()) return l2link::to_string(a_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t k = a_.size(); k-- > 0;) {
      if (a_[k] == 0) continue;
      Rational c = a_[k];
      if (first) {
        if (c < 0) {
          out << "-";
          c = -c;
        }
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      if (k == 0) {
        out << l2link::to_string(c);
      } else {
        if (c != 1) out << l2link::to_string(c) << "*";
        out << "z" << k;
      }
    }
    return out.str();
  }

 private:
  static std::tuple<std::vector<Rational>, std::vector<Rational>, FieldContext> align(
      const Cyc& x, const Cyc& y) {
    FieldContext K;
    if (!x.K_.null() && !y.K_.null()) {
      if (!x.K_.same(y.K_)) throw error("mixing scalars from different conductors");
      K = x.K_;
      return {x.a_, y.a_, K};
    }
    if (!x.K_.null()) {
      K = x.K_;
      std::vector<Rational> b(static_cast<size_t>(K.degree()), Rational(0));
      b[0] = y.a_[0];
      return {x.a_, std::move(b), K};
    }
    if (!y.K_.null()) {
      K = y.K_;
      std::vector<Rational> a(static_cast<size_t>(K.degree()), Rational(0));
      a[0] = x.a_[0];
      return {std::move(a), y.a_, K};
    }
    return {x.a_, y.a_, K};
  }

  FieldContext K_;
  std::vector<Rational> a_;
};

}  // namespace l2link
