// Laurent polynomials over Q(zeta_N) with the involution t -> t^{-1}
// composed with coefficient conjugation (trivial orientation character).
#pragma once

#include <l2link/cyclotomic.hpp>

#include <map>
#include <sstream>

namespace l2link {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const FieldContext& K) : K_(K) {}
  LaurentPoly(const FieldContext& K, std::map<long, Cyc> terms) : K_(K) {
    for (auto& [e, c] : terms)
      if (!c.is_zero()) terms_.emplace(e, c);
  }

  static LaurentPoly zero(const FieldContext& K) { return LaurentPoly(K); }
  static LaurentPoly constant(const FieldContext& K, const Cyc& c) {
    LaurentPoly p(K);
    p.set(0, c);
    return p;
  }
  static LaurentPoly one(const FieldContext& K) { return constant(K, Cyc::one(K)); }
  // c * t^e
  static LaurentPoly monomial(const FieldContext& K, const Cyc& c, long e) {
    LaurentPoly p(K);
    p.set(e, c);
    return p;
  }
  static LaurentPoly t_minus(const FieldContext& K, const Cyc& c) {
    LaurentPoly p(K);
    p.set(1, Cyc::one(K));
    p.set(0, -c);
    return p;
  }

  const FieldContext& field() const { return K_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Cyc>& terms() const { return terms_; }

  Cyc coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyc::zero(K_) : it->second;
  }
  void set(long e, const Cyc& c) {
    if (c.is_zero())
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  // Unit of Lambda = nonzero monomial.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == Cyc::one(K_);
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    if (r.K_.null()) r.K_ = b.K_;
    for (const auto& [e, c] : b.terms_) r.set(e, r.coeff(e) + c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    if (r.K_.null()) r.K_ = b.K_;
    for (const auto& [e, c] : b.terms_) r.set(e, r.coeff(e) - c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r(K_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.K_.null() ? b.K_ : a.K_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const Cyc& s, const LaurentPoly& a) {
    LaurentPoly r(a.K_);
    for (const auto& [e, c] : a.terms_) r.set(e, s * c);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // conj(sum a_e t^e) = sum conj(a_e) t^{-e}
  LaurentPoly involution() const {
    LaurentPoly r(K_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c.conj());
    return r;
  }

  // p(zeta_N^a), exact.
  Cyc evaluate_at_root(long a) const {
    if (K_.null()) throw error("evaluate_at_root requires a field context");
    Cyc acc = Cyc::zero(K_);
    long n = K_.conductor();
    for (const auto& [e, c] : terms_) {
      long m = ((a * e) % n + n) % n;
      acc += c * Cyc::zeta(K_, m);
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending exponents reads like handwritten algebra
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      bool composite = cs.find(' ') != std::string::npos;
      if (first) {
        first = false;
        if (neg && !composite) {
          out << "-";
          cs = cs.substr(1);
        }
      } else {
        if (neg && !composite) {
          out << " - ";
          cs = cs.substr(1);
        } else {
          out << " + ";
        }
      }
      if (composite) cs = "(" + cs + ")";
      if (e == 0) {
        out << cs;
      } else {
        if (cs != "1") out << cs << "*";
        out << "t";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  FieldContext K_;
  std::map<long, Cyc> terms_;
};

inline LaurentPoly involution(const LaurentPoly& p) { return p.involution(); }
inline Cyc evaluate_at_root(const LaurentPoly& p, long a) { return p.evaluate_at_root(a); }

}  // namespace l2link
