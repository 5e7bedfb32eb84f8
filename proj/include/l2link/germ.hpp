// Principal parts at a unit root c = zeta_N^a: elements of R/Lambda_c
// stored as the finite list beta_1..beta_m meaning sum beta_j (t-c)^{-j}.
//
// Conjugation is induced by t -> t^{-1}, c -> c^{-1}:
//   conj((t-c)^{-j}) = (-tc)^j (t-c)^{-j}
//                    = sum_{r=1..j} (-1)^j C(j,r) c^{j+r} (t-c)^{-r}  (mod Lambda_c).
// The g-expansion uses g = i*c*(t-c)^{-1}, so alpha_j = beta_j * (i c)^{-j}.
#pragma once

#include <l2link/rational_function.hpp>

namespace l2link {

class GermValue {
 public:
  GermValue() = default;
  GermValue(const FieldContext& K, long point) : K_(K), a_(point) {}
  GermValue(const FieldContext& K, long point, std::vector<Cyc> beta)
      : K_(K), a_(point), beta_(std::move(beta)) {
    trim();
  }

  static GermValue zero(const FieldContext& K, long point) { return GermValue(K, point); }
  // (t-c)^{-order}
  static GermValue basis(const FieldContext& K, long point, long order) {
    std::vector<Cyc> b(static_cast<size_t>(order), Cyc::zero(K));
    b.back() = Cyc::one(K);
    return GermValue(K, point, std::move(b));
  }

  // Principal part of a rational function at c = zeta_N^a.
  static GermValue principal_part(const RatFun& f, const FieldContext& K, long point) {
    Cyc c = Cyc::zeta(K, point);
    Poly den = f.den();
    long m = den.strip_root(c);  // den now coprime to (t-c)
    if (m == 0 || f.is_zero()) return zero(K, point);
    // series of num/den in powers of u = (t-c), truncated below u^m
    std::vector<Cyc> p = f.num().taylor_at(c, m);
    std::vector<Cyc> q = den.taylor_at(c, m);
    std::vector<Cyc> s(static_cast<size_t>(m), Cyc::zero(K));
    Cyc q0inv = q[0].inverse();
    for (long k = 0; k < m; ++k) {
      Cyc acc = p[static_cast<size_t>(k)];
      for (long j = 1; j <= k; ++j)
        acc -= q[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
      s[static_cast<size_t>(k)] = acc * q0inv;
    }
    // f = (s_0 + s_1 u + ...)/u^m + regular, so beta_j = s_{m-j}
    std::vector<Cyc> beta(static_cast<size_t>(m), Cyc::zero(K));
    for (long j = 1; j <= m; ++j) beta[static_cast<size_t>(j - 1)] = s[static_cast<size_t>(m - j)];
    return GermValue(K, point, std::move(beta));
  }

  const FieldContext& field() const { return K_; }
  long point() const { return a_; }
  bool is_zero() const { return beta_.empty(); }
  long order() const { return static_cast<long>(beta_.size()); }
  // beta_j, 1-based
  Cyc beta(long j) const {
    if (j < 1 || j > order()) return Cyc::zero(K_);
    return beta_[static_cast<size_t>(j - 1)];
  }
  const std::vector<Cyc>& betas() const { return beta_; }

  friend GermValue operator+(const GermValue& x, const GermValue& y) {
    x.check_compatible(y);
    std::vector<Cyc> b(std::max(x.beta_.size(), y.beta_.size()), Cyc::zero(x.K_));
    for (size_t i = 0; i < x.beta_.size(); ++i) b[i] += x.beta_[i];
    for (size_t i = 0; i < y.beta_.size(); ++i) b[i] += y.beta_[i];
    return GermValue(x.K_, x.a_, std::move(b));
  }
  friend GermValue operator-(const GermValue& x, const GermValue& y) { return x + (-y); }
  GermValue operator-() const {
    GermValue r = *this;
    for (auto& b : r.beta_) b = -b;
    return r;
  }
  friend GermValue operator*(const Cyc& s, const GermValue& x) {
    GermValue r = x;
    for (auto& b : r.beta_) b = s * b;
    r.trim();
    return r;
  }
  GermValue& operator+=(const GermValue& o) { return *this = *this + o; }
  friend bool operator==(const GermValue& x, const GermValue& y) {
    x.check_compatible(y);
    return (x - y).is_zero();
  }
  friend bool operator!=(const GermValue& x, const GermValue& y) { return !(x == y); }

  // Multiplication by a Laurent polynomial, i.e. by its power series at c.
  GermValue mul_laurent(const LaurentPoly& p) const {
    if (is_zero() || p.is_zero()) return zero(K_, a_);
    long m = order();
    Cyc c = Cyc::zeta(K_, a_);
    // expansion of p in powers of u = (t-c) up to u^{m-1}
    auto [poly, shift] = Poly::from_laurent(p);
    std::vector<Cyc> series = poly.taylor_at(c, m);
    if (shift != 0) {
      // t^shift = (c+u)^shift; negative shift expands as a geometric-type series
      std::vector<Cyc> ts(static_cast<size_t>(m), Cyc::zero(K_));
      if (shift > 0) {
        for (long k = 0; k < m; ++k)
          ts[static_cast<size_t>(k)] =
              Cyc::from_rational(K_, binomial(shift, k)) * c.pow(shift - k);
      } else {
        long f = -shift;
        for (long k = 0; k < m; ++k) {
          Rational b = binomial(f + k - 1, k);
          if (k % 2 == 1) b = -b;
          ts[static_cast<size_t>(k)] = Cyc::from_rational(K_, b) * c.pow(-f - k);
        }
      }
      std::vector<Cyc> merged(static_cast<size_t>(m), Cyc::zero(K_));
      for (long i = 0; i < m; ++i)
        for (long j = 0; i + j < m; ++j)
          merged[static_cast<size_t>(i + j)] += series[static_cast<size_t>(i)] * ts[static_cast<size_t>(j)];
      series = std::move(merged);
    }
    // (sum beta_j u^{-j}) * (sum s_k u^k): coefficient at u^{-r}
    std::vector<Cyc> out(static_cast<size_t>(m), Cyc::zero(K_));
    for (long j = 1; j <= m; ++j) {
      if (beta(j).is_zero()) continue;
      for (long k = 0; k < j; ++k)
        out[static_cast<size_t>(j - k - 1)] += beta(j) * series[static_cast<size_t>(k)];
    }
    return GermValue(K_, a_, std::move(out));
  }

  GermValue conj() const {
    if (is_zero()) return *this;
    long m = order();
    Cyc c = Cyc::zeta(K_, a_);
    std::vector<Cyc> out(static_cast<size_t>(m), Cyc::zero(K_));
    for (long j = 1; j <= m; ++j) {
      Cyc bj = beta(j).conj();
      if (bj.is_zero()) continue;
      for (long r = 1; r <= j; ++r) {
        Rational sgn_b = binomial(j, r);
        if (j % 2 == 1) sgn_b = -sgn_b;
        out[static_cast<size_t>(r - 1)] += bj * Cyc::from_rational(K_, sgn_b) * c.pow(j + r);
      }
    }
    return GermValue(K_, a_, std::move(out));
  }

  // alpha_j with value = sum alpha_j g^j, g = i*c*(t-c)^{-1}; 1-based list.
  std::vector<Cyc> g_coefficients() const {
    Cyc ic = Cyc::i(K_) * Cyc::zeta(K_, a_);
    std::vector<Cyc> alpha(beta_.size(), Cyc::zero(K_));
    for (long j = 1; j <= order(); ++j)
      alpha[static_cast<size_t>(j - 1)] = beta(j) * ic.pow(-j);
    return alpha;
  }
  static GermValue from_g_coefficients(const FieldContext& K, long point,
                                       const std::vector<Cyc>& alpha) {
    Cyc ic = Cyc::i(K) * Cyc::zeta(K, point);
    std::vector<Cyc> beta(alpha.size(), Cyc::zero(K));
    for (size_t j = 1; j <= alpha.size(); ++j)
      beta[j - 1] = alpha[j - 1] * ic.pow(static_cast<long>(j));
    return GermValue(K, point, std::move(beta));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long j = order(); j >= 1; --j) {
      if (beta(j).is_zero()) continue;
      if (!first) out << " + ";
      first = false;
      std::string cs = beta(j).to_string();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out << cs << "*(t-c)^-" << j;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!beta_.empty() && beta_.back().is_zero()) beta_.pop_back();
  }
  void check_compatible(const GermValue& o) const {
    if (!K_.same(o.K_) || a_ != o.a_)
      throw error("germ arithmetic across different localization points");
  }

  FieldContext K_;
  long a_ = 0;
  std::vector<Cyc> beta_;
};

}  // namespace l2link
