#pragma once

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "polystab/errors.hpp"
#include "polystab/rational.hpp"

namespace polystab {

namespace detail {

// Factor N > 0 as s^2 * c with c square-free, by trial division up to 10^6
// followed by a perfect-square test on the remainder.  A remainder that is
// neither 1 nor a perfect square is composed of primes > 10^6; it may itself
// contain a hidden square factor, which at desk scale never arises because
// every radicand we form is a product of determinants of small integer
// matrices.  The remainder is folded into c unchanged, which keeps sqrt_of
// correct (c is then only "square-free as far as we can tell").
inline std::pair<mpz_class, mpz_class> squarefree_split(mpz_class n) {
  mpz_class s = 1, c = 1;
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= d;
    if (e % 2) c *= d;
  };
  strip(2);
  for (unsigned long d = 3; d <= 1000000UL; d += 2) {
    if (mpz_class(d) * d > n) break;
    strip(d);
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      s *= sqrt(n);
    } else {
      c *= n;
    }
  }
  return {s, c};
}

}  // namespace detail

// Element a + b*sqrt(c) of a real quadratic extension of the rationals.
// c is a nonnegative integer radicand; c == 0 encodes a plain rational
// (with b == 0), and c == 1 is normalized away on construction.  All
// operands of a binary operation must agree on c (or be rational), else
// FieldMismatch is thrown: values from different extensions never mix.
class Surd {
 public:
  Surd() : a_(0), b_(0), c_(0) {}
  Surd(int n) : a_(n), b_(0), c_(0) {}        // NOLINT: implicit by design
  Surd(const Rat& r) : a_(r), b_(0), c_(0) {} // NOLINT

  Surd(const Rat& a, const Rat& b, const mpz_class& c) : a_(a), b_(b), c_(c) {
    if (c_ < 0) throw std::domain_error("negative radicand");
    if (c_ == 0) b_ = 0;  // b*sqrt(0) contributes nothing
    if (c_ == 1) {        // sqrt(1) folds into the rational part
      a_ += b_;
      b_ = 0;
    }
    if (b_.is_zero()) c_ = 0;
  }

  // Exact square root of a nonnegative rational, as a + b*sqrt(c) with the
  // square part extracted: sqrt(p/q) = sqrt(p*q)/q.
  static Surd sqrt_of(const Rat& d) {
    if (d.sgn() < 0) throw std::domain_error("sqrt of negative rational");
    if (d.is_zero()) return Surd(0);
    auto [s, c] = detail::squarefree_split(d.num() * d.den());
    return Surd(Rat(0), Rat(s, d.den()), c);
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const mpz_class& c() const { return c_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Rat rational() const {
    if (!is_rational())
      throw std::domain_error("surd with nonzero irrational part");
    return a_;
  }

  // Sign without floating point: when the two terms disagree in sign,
  // compare their squares, i.e. sgn(a + b*sqrt(c)) = sgn(a)*sgn(a^2 - b^2 c).
  int sgn() const {
    const int sa = a_.sgn(), sb = b_.sgn();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    return sa * (a_ * a_ - b_ * b_ * Rat(c_)).sgn();
  }

  // a^2 - b^2 c, the product with the conjugate.  Zero only for the zero
  // element when c is not a perfect square.
  Rat norm() const { return a_ * a_ - b_ * b_ * Rat(c_); }
  Surd conj() const { return Surd(a_, -b_, c_); }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(c_.get_d());
  }

  friend Surd operator+(const Surd& x, const Surd& y) {
    return Surd(x.a_ + y.a_, x.b_ + y.b_, merged(x, y));
  }
  friend Surd operator-(const Surd& x, const Surd& y) {
    return Surd(x.a_ - y.a_, x.b_ - y.b_, merged(x, y));
  }
  friend Surd operator*(const Surd& x, const Surd& y) {
    const mpz_class c = merged(x, y);
    return Surd(x.a_ * y.a_ + x.b_ * y.b_ * Rat(c),
                x.a_ * y.b_ + x.b_ * y.a_, c);
  }
  friend Surd operator/(const Surd& x, const Surd& y) {
    if (y.is_zero()) throw std::domain_error("surd division by zero");
    if (y.is_rational()) return Surd(x.a_ / y.a_, x.b_ / y.a_, x.c_);
    const Rat n = y.norm();
    if (n.is_zero())
      throw std::domain_error("zero divisor: radicand is a perfect square");
    Surd z = x * y.conj();
    return Surd(z.a_ / n, z.b_ / n, z.c_);
  }

  Surd operator-() const { return Surd(-a_, -b_, c_); }
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd& operator/=(const Surd& o) { return *this = *this / o; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
  friend bool operator<(const Surd& x, const Surd& y) {
    return (x - y).sgn() < 0;
  }
  friend bool operator<=(const Surd& x, const Surd& y) {
    return (x - y).sgn() <= 0;
  }
  friend bool operator>(const Surd& x, const Surd& y) { return y < x; }
  friend bool operator>=(const Surd& x, const Surd& y) { return y <= x; }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) {
    os << s.a_.to_string();
    if (!s.b_.is_zero())
      os << " + (" << s.b_.to_string() << ")*sqrt(" << s.c_.get_str() << ")";
    return os;
  }

 private:
  // Common radicand of two operands; rational values adopt the other side's.
  static mpz_class merged(const Surd& x, const Surd& y) {
    if (x.c_ == 0) return y.c_;
    if (y.c_ == 0) return x.c_;
    if (x.c_ != y.c_)
      throw FieldMismatch("radicands differ: " + x.c_.get_str() + " vs " +
                          y.c_.get_str());
    return x.c_;
  }

  Rat a_, b_;
  mpz_class c_;
};

}  // namespace polystab
