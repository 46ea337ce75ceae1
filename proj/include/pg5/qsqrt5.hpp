#pragma once

#include <Eigen/Core>

#include <cmath>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <string>

#include "pg5/rational.hpp"

namespace pg5 {

/// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
///
/// All field operations and comparisons are exact: ordering is decided from
/// the signs of a, b and of a^2 - 5 b^2, never from floating point.
class QSqrt5 {
 public:
  QSqrt5() : a_(0), b_(0) {}
  QSqrt5(int v) : a_(v), b_(0) {}  // NOLINT: implicit by design, scalar embedding
  QSqrt5(Rational v) : a_(std::move(v)), b_(0) {}  // NOLINT
  QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt5 sqrt5() { return QSqrt5(Rational(0), Rational(1)); }
  /// (1 + sqrt 5)/2
  static QSqrt5 golden() { return QSqrt5(Rational(1, 2), Rational(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact sign of a + b*sqrt(5): -1, 0 or +1.
  int sign() const {
    const int sa = pg5::sign(a_), sb = pg5::sign(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: |a| vs |b| sqrt5 decided by a^2 vs 5 b^2.
    const int cmp = pg5::sign(a_ * a_ - 5 * b_ * b_);
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
  }

  QSqrt5 operator-() const { return QSqrt5(-a_, -b_); }
  QSqrt5& operator+=(const QSqrt5& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt5& operator-=(const QSqrt5& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt5& operator*=(const QSqrt5& o) {
    Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QSqrt5& operator/=(const QSqrt5& o) {
    // 1/(a + b sqrt5) = (a - b sqrt5) / (a^2 - 5 b^2)
    Rational n = o.a_ * o.a_ - 5 * o.b_ * o.b_;
    QSqrt5 inv(o.a_ / n, -o.b_ / n);
    return *this *= inv;
  }

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QSqrt5& x, const QSqrt5& y) { return !(x == y); }
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() >= 0; }

  double to_double() const {
    return pg5::to_double(a_) + pg5::to_double(b_) * std::sqrt(5.0);
  }

  long double to_long_double() const {
    return a_.template convert_to<long double>() +
           b_.template convert_to<long double>() * sqrtl(5.0L);
  }

  std::string str() const {
    std::ostringstream os;
    if (b_.is_zero()) {
      os << a_.str();
    } else {
      if (!a_.is_zero()) os << a_.str() << (pg5::sign(b_) > 0 ? " + " : " - ");
      else if (pg5::sign(b_) < 0) os << "-";
      const Rational ab = boost::multiprecision::abs(b_);
      if (ab != 1) os << ab.str() << "*";
      os << "sqrt(5)";
    }
    return os.str();
  }

 private:
  Rational a_, b_;
};

inline QSqrt5 abs(const QSqrt5& x) { return x.sign() < 0 ? -x : x; }

inline std::ostream& operator<<(std::ostream& os, const QSqrt5& x) { return os << x.str(); }

/// Exact square root of a rational inside Q(sqrt5), if it exists there:
/// r = s^2 gives s, r = 5 s^2 gives s*sqrt5.
inline std::optional<QSqrt5> sqrt_in_qsqrt5(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  Rational root;
  if (rational_square_root(r, &root)) return QSqrt5(root);
  if (rational_square_root(r / 5, &root)) return QSqrt5(Rational(0), root);
  return std::nullopt;
}

}  // namespace pg5

namespace Eigen {

template <>
struct NumTraits<pg5::QSqrt5> : GenericNumTraits<pg5::QSqrt5> {
  typedef pg5::QSqrt5 Real;
  typedef pg5::QSqrt5 NonInteger;
  typedef pg5::QSqrt5 Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40,
  };
  static inline Real epsilon() { return pg5::QSqrt5(0); }
  static inline Real dummy_precision() { return pg5::QSqrt5(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
