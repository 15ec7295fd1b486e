#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

#include "polystab/errors.hpp"

namespace polystab {

// Arbitrary-precision rational scalar backed by GMP.  Values are kept in
// canonical form (reduced, positive denominator) after every operation, so
// equality is plain representation equality and serialization is unique.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                // NOLINT: implicit by design
  Rat(long n) : v_(n) {}               // NOLINT
  Rat(const mpz_class& n) : v_(n) {}   // NOLINT

  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw FormatError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional leading '-' on p, base-10 digits only.
  static Rat parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string ns = text.substr(0, slash);
    const std::string ds =
        slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!valid_int(ns) || !valid_int(ds))
      throw FormatError("bad rational literal: '" + text + "'");
    mpz_class num(ns), den(ds);
    if (den == 0) throw FormatError("zero denominator: '" + text + "'");
    return Rat(num, den);
  }

  std::string to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return sgn() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  Rat operator-() const { Rat r; r.v_ = -v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  static bool valid_int(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sgn() < 0 ? -r : r; }

}  // namespace polystab
