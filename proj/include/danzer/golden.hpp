#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

namespace danzer {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element a + b*tau of the golden field Q(tau), tau^2 = tau + 1.
///
/// Both components are kept in canonical (reduced) form, so two values are
/// equal iff their components are equal. The ordering operators compare the
/// real numbers the values denote.
class Golden {
 public:
  Golden() = default;
  Golden(int n) : a_(n) {}  // NOLINT: implicit, Eigen builds literals from ints
  Golden(long n) : a_(n) {}  // NOLINT
  explicit Golden(Rational a, Rational b = 0);

  static Golden tau() { return Golden(0, 1); }
  /// The algebraic conjugate of tau, 1 - tau = -1/tau.
  static Golden sigma() { return Golden(1, -1); }
  static Golden half(const Golden& x);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// tau -> sigma, i.e. (a, b) -> (a + b, -b). An involutive ring automorphism.
  Golden conjugate() const;
  /// Field norm x * conj(x) = a^2 + ab - b^2 (always rational).
  Rational norm() const;
  /// Throws std::domain_error on zero.
  Golden inverse() const;
  /// Exact sign of the real value, in {-1, 0, +1}.
  int sign() const;
  double to_double() const;

  Golden& operator+=(const Golden& o);
  Golden& operator-=(const Golden& o);
  Golden& operator*=(const Golden& o);
  Golden& operator/=(const Golden& o);

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(Golden x, const Golden& y) { return x /= y; }
  Golden operator-() const;
  Golden operator+() const { return *this; }

  friend bool operator==(const Golden& x, const Golden& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Golden& x, const Golden& y);

  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Golden& x);

inline const Golden kTau = Golden::tau();
inline const Golden kSigma = Golden::sigma();

/// Fibonacci number F_n for any integer n, with F_{-n} = (-1)^{n+1} F_n.
Integer fibonacci(long n);

/// tau^n = F_{n-1} + F_n tau, valid for negative n as well.
Golden tau_power(long n);

Golden abs(const Golden& x);

}  // namespace danzer

namespace Eigen {

template <>
struct NumTraits<danzer::Golden> : GenericNumTraits<danzer::Golden> {
  using Real = danzer::Golden;
  using NonInteger = danzer::Golden;
  using Nested = danzer::Golden;
  using Literal = danzer::Golden;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 60
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
