#include "danzer/golden.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace danzer {

namespace {

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace

Golden::Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Golden Golden::half(const Golden& x) { return Golden(x.a_ / 2, x.b_ / 2); }

Golden Golden::conjugate() const { return Golden(a_ + b_, -b_); }

Rational Golden::norm() const {
  Rational n = a_ * a_ + a_ * b_ - b_ * b_;
  return n;
}

Golden Golden::inverse() const {
  if (is_zero()) throw std::domain_error("Golden: division by zero");
  // 1/x = conj(x) / N(x)
  const Rational n = norm();
  Golden c = conjugate();
  return Golden(c.a_ / n, c.b_ / n);
}

int Golden::sign() const {
  // value = (u + b*sqrt5) / 2 with u = 2a + b
  const Rational u = 2 * a_ + b_;
  const int su = sign_of(u);
  const int sb = sign_of(b_);
  if (sb == 0) return su;
  if (su == 0 || su == sb) return sb;
  const Rational d = 5 * b_ * b_ - u * u;
  return sb * sign_of(d);
}

double Golden::to_double() const {
  return a_.get_d() + b_.get_d() * 1.6180339887498948482;
}

Golden& Golden::operator+=(const Golden& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Golden& Golden::operator-=(const Golden& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Golden& Golden::operator*=(const Golden& o) {
  // (a1 + b1 t)(a2 + b2 t) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) t
  const Rational bb = b_ * o.b_;
  Rational na = a_ * o.a_ + bb;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bb;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Golden& Golden::operator/=(const Golden& o) { return *this *= o.inverse(); }

Golden Golden::operator-() const { return Golden(-a_, -b_); }

std::strong_ordering operator<=>(const Golden& x, const Golden& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Golden::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Golden& x) {
  if (x.is_rational()) return os << x.a().get_str();
  if (sgn(x.a()) != 0) os << x.a().get_str() << (sgn(x.b()) > 0 ? "+" : "");
  if (x.b() == -1)
    os << "-";
  else if (x.b() != 1)
    os << x.b().get_str() << "*";
  return os << "t";
}

Integer fibonacci(long n) {
  if (n < 0) {
    Integer f = fibonacci(-n);
    return (n % 2 == 0) ? Integer(-f) : f;
  }
  Integer prev = 0, cur = 1;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Golden tau_power(long n) {
  return Golden(Rational(fibonacci(n - 1)), Rational(fibonacci(n)));
}

Golden abs(const Golden& x) { return x.sign() < 0 ? -x : x; }

}  // namespace danzer
