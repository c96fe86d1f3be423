#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qisg {

/// Exact rational scalar: arbitrary-precision numerator/denominator, always in
/// lowest terms with positive denominator. Every computation in this library
/// runs over this type; nothing is ever rounded.
class Rational {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long long num, long long den);
  explicit Rational(rep v) : v_(std::move(v)) {}

  /// Accepts "p/q", plain integers and decimal strings ("-3", "1.25").
  static Rational parse(std::string_view text);

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const;
  const rep& value() const { return v_; }

  /// Canonical form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rational inverse() const;
  Rational pow(long e) const;  // negative exponents require invertibility

  Rational operator-() const { return Rational(rep(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return a.v_ < 0 ? -a : a; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  rep v_;
};

}  // namespace qisg

namespace Eigen {

template <>
struct NumTraits<qisg::Rational> : GenericNumTraits<qisg::Rational> {
  using Real = qisg::Rational;
  using NonInteger = qisg::Rational;
  using Literal = qisg::Rational;
  using Nested = qisg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return qisg::Rational(0); }
  static inline Real dummy_precision() { return qisg::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
