#include "qisg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qisg {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("invalid digit in rational literal: '" + std::string(s) + "'");
  return cpp_int(std::string(s));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

namespace {

Rational::rep make_ratio(cpp_int num, cpp_int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational::rep(num, den);
}

}  // namespace

Rational::Rational(long long num, long long den) : v_(make_ratio(cpp_int(num), cpp_int(den))) {}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto pos = s.find('/'); pos != std::string_view::npos) {
    cpp_int num = parse_int(s.substr(0, pos));
    cpp_int den = parse_int(s.substr(pos + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(make_ratio(num, den));
  }
  if (auto pos = s.find('.'); pos != std::string_view::npos) {
    std::string_view ip = s.substr(0, pos), fp = s.substr(pos + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip.remove_prefix(1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    cpp_int num = ip.empty() ? cpp_int(0) : parse_int(ip);
    cpp_int den = 1;
    for (char c : fp) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    rep v(num, den);
    return Rational(neg ? rep(-v) : v);
  }
  return Rational(rep(parse_int(s)));
}

bool Rational::is_integer() const { return denominator(v_) == 1; }

std::string Rational::str() const {
  if (is_integer()) return numerator(v_).str();
  return numerator(v_).str() + "/" + denominator(v_).str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return Rational(make_ratio(denominator(v_), numerator(v_)));
}

Rational Rational::pow(long e) const {
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  for (; k > 0; --k) acc *= base;
  return acc;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  return Rational(Rational::rep(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qisg
