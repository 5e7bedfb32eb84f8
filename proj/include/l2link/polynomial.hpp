// Dense ordinary polynomials over Q(zeta_N). K[t] is Euclidean by degree;
// this is the workhorse behind the Smith normal form and germ extraction.
#pragma once

#include <l2link/laurent.hpp>

namespace l2link {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldContext& K) : K_(K) {}
  Poly(const FieldContext& K, std::vector<Cyc> c) : K_(K), c_(std::move(c)) { trim(); }

  static Poly zero(const FieldContext& K) { return Poly(K); }
  static Poly constant(const FieldContext& K, const Cyc& c) { return Poly(K, {c}); }
  static Poly one(const FieldContext& K) { return constant(K, Cyc::one(K)); }
  // t - c
  static Poly t_minus(const FieldContext& K, const Cyc& c) { return Poly(K, {-c, Cyc::one(K)}); }

  const FieldContext& field() const { return K_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Cyc>& coeffs() const { return c_; }
  Cyc coeff(long k) const {
    return (k < 0 || k >= static_cast<long>(c_.size())) ? Cyc::zero(K_) : c_[static_cast<size_t>(k)];
  }
  Cyc leading() const {
    if (is_zero()) throw error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a.K_.null() ? b.K_ : a.K_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Cyc::zero(r.K_));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r(a.K_.null() ? b.K_ : a.K_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Cyc::zero(r.K_));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.K_.null() ? b.K_ : a.K_);
    Poly r(a.K_.null() ? b.K_ : a.K_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Cyc::zero(r.K_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const Cyc& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw error("polynomial division by zero");
    Poly q(K_), r = *this;
    Cyc lead_inv = d.leading().inverse();
    if (r.degree() >= d.degree())
      q.c_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, Cyc::zero(K_));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      long shift = r.degree() - d.degree();
      Cyc f = r.leading() * lead_inv;
      q.c_[static_cast<size_t>(shift)] = f;
      for (long i = 0; i <= d.degree(); ++i)
        r.c_[static_cast<size_t>(shift + i)] -= f * d.c_[static_cast<size_t>(i)];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  Poly divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Cyc evaluate(const Cyc& x) const {
    Cyc acc = Cyc::zero(K_.null() ? x.field() : K_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Coefficients of p in powers of (t - c), lowest first, up to `count` terms.
  std::vector<Cyc> taylor_at(const Cyc& c, long count) const {
    std::vector<Cyc> out;
    out.reserve(static_cast<size_t>(count));
    Poly shift = t_minus(K_, c);
    Poly cur = *this;
    for (long k = 0; k < count; ++k) {
      auto [q, r] = cur.divmod(shift);
      out.push_back(r.is_zero() ? Cyc::zero(K_) : r.coeff(0));
      cur = std::move(q);
      if (cur.is_zero()) {
        while (static_cast<long>(out.size()) < count) out.push_back(Cyc::zero(K_));
        break;
      }
    }
    return out;
  }

  // Multiplicity of (t - c) dividing p, with p reduced by that factor.
  long strip_root(const Cyc& c) {
    long m = 0;
    Poly shift = t_minus(K_, c);
    while (!is_zero() && evaluate(c).is_zero()) {
      *this = divexact(shift);
      ++m;
    }
    return m;
  }

  LaurentPoly to_laurent(long shift = 0) const {
    LaurentPoly r(K_);
    for (size_t i = 0; i < c_.size(); ++i) r.set(static_cast<long>(i) + shift, c_[i]);
    return r;
  }
  // Clears negative powers: p = t^shift * poly.
  static std::pair<Poly, long> from_laurent(const LaurentPoly& l) {
    long shift = std::min<long>(0, l.min_exp());
    if (l.is_zero()) return {Poly(l.field()), 0};
    shift = l.min_exp();
    Poly p(l.field());
    p.c_.assign(static_cast<size_t>(l.max_exp() - shift) + 1, Cyc::zero(l.field()));
    for (const auto& [e, c] : l.terms()) p.c_[static_cast<size_t>(e - shift)] = c;
    return {p, shift};
  }

  std::string to_string() const { return to_laurent().to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  FieldContext K_;
  std::vector<Cyc> c_;
};

}  // namespace l2link
