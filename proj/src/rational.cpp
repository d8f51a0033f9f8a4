#include "dosage/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "dosage/errors.hpp"

namespace dosage {

namespace bmp = boost::multiprecision;

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = bmp::cpp_rational(bmp::cpp_int(numerator), bmp::cpp_int(denominator));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw InputError("cannot represent a non-finite value exactly");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer for every finite double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  bmp::cpp_rational result{bmp::cpp_int(scaled)};
  const int shift = exponent - 53;
  bmp::cpp_int power = 1;
  power <<= (shift >= 0 ? shift : -shift);
  if (shift >= 0) {
    result *= power;
  } else {
    result /= power;
  }
  return Rational(std::move(result));
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] { return InputError("not a number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse(text.substr(0, slash));
    const Rational den = parse(text.substr(slash + 1));
    if (den == Rational(0)) throw fail();
    return num / den;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const std::string exp_text(text.substr(e + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp_text.size()) throw fail();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  bmp::cpp_int digits = 0;
  long fraction_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (const char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw fail();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++fraction_digits;
    } else {
      throw fail();
    }
  }
  if (!seen_digit) throw fail();

  bmp::cpp_rational result{digits};
  const long scale = exponent - fraction_digits;
  bmp::cpp_int power = bmp::pow(bmp::cpp_int(10), static_cast<unsigned>(scale >= 0 ? scale : -scale));
  if (scale >= 0) {
    result *= power;
  } else {
    result /= power;
  }
  if (negative) result = -result;
  return Rational(std::move(result));
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const {
  std::ostringstream os;
  os << value_;
  return os.str();
}

Rational Rational::numerator() const { return Rational(bmp::cpp_rational(bmp::numerator(value_))); }
Rational Rational::denominator() const { return Rational(bmp::cpp_rational(bmp::denominator(value_))); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw InputError("rational division by zero");
  return Rational(a.value_ / b.value_);
}
Rational Rational::operator-() const { return Rational(-value_); }
Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  *this = *this / other;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

Rational sqrt(const Rational& r) {
  if (r < Rational(0)) throw InputError("square root of a negative rational");
  const auto num = bmp::numerator(r.value_);
  const auto den = bmp::denominator(r.value_);
  const auto num_root = bmp::sqrt(num);
  const auto den_root = bmp::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) {
    throw InputError("square root of " + r.str() + " is not rational");
  }
  return Rational(bmp::cpp_rational(num_root, den_root));
}

}  // namespace dosage
