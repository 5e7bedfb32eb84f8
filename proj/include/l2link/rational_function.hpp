// Rational functions K(t), normalized with monic denominator and gcd 1.
// Used for the exact linear solves behind the linking pairing; the
// denominators are where the (t-c)-adic torsion shows up.
#pragma once

#include <l2link/polynomial.hpp>

namespace l2link {

class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(const FieldContext& K)
      : num_(Poly::zero(K)), den_(Poly::one(K)) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("rational function with zero denominator");
    normalize();
  }
  static RatFun from_poly(Poly p) {
    FieldContext K = p.field();
    return RatFun(std::move(p), Poly::one(K));
  }
  static RatFun from_laurent(const LaurentPoly& l) {
    auto [p, shift] = Poly::from_laurent(l);
    FieldContext K = l.field();
    if (shift >= 0) {
      Poly shifted = p;
      for (long i = 0; i < shift; ++i) shifted = shifted * Poly(K, {Cyc::zero(K), Cyc::one(K)});
      return from_poly(shifted);
    }
    Poly den = Poly::one(K);
    Poly t = Poly(K, {Cyc::zero(K), Cyc::one(K)});
    for (long i = 0; i < -shift; ++i) den = den * t;
    return RatFun(p, den);
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldContext& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return (a - b).is_zero(); }

  // Order of vanishing of the denominator at c after reduction; this is
  // the (t-c)-adic pole order.
  long pole_order(const Cyc& c) const {
    Poly d = den_;
    return d.strip_root(c);
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::one(den_.field());
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    Cyc lead_inv = den_.leading().inverse();
    num_ = lead_inv * num_;
    den_ = lead_inv * den_;
  }

  Poly num_, den_;
};

}  // namespace l2link
