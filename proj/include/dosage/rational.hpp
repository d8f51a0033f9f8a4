#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace dosage {

/// Exact arbitrary-precision rational number.
///
/// Value wrapper around boost's cpp_rational, usable as an Eigen scalar.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Exact conversion of a finite double (every finite double is dyadic).
  static Rational from_double(double value);
  /// Parses "3", "-0.125", "2/3", "1e-2" exactly.
  static Rational parse(std::string_view text);

  double to_double() const;
  std::string str() const;

  Rational numerator() const;
  Rational denominator() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);
  friend Rational sqrt(const Rational& r);

 private:
  explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}
  boost::multiprecision::cpp_rational value_;
};

Rational abs(const Rational& r);
/// Eigen needs sqrt for a handful of generic reductions; exact roots only.
Rational sqrt(const Rational& r);

/// Scalar-generic conversion helpers used by the templated algebra.
template <typename Scalar>
double to_double(const Scalar& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return value.to_double();
  } else {
    return static_cast<double>(value);
  }
}

}  // namespace dosage

namespace Eigen {

template <>
struct NumTraits<dosage::Rational> : GenericNumTraits<dosage::Rational> {
  using Real = dosage::Rational;
  using NonInteger = dosage::Rational;
  using Nested = dosage::Rational;
  using Literal = dosage::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 40
  };

  static dosage::Rational epsilon() { return dosage::Rational(0); }
  static dosage::Rational dummy_precision() { return dosage::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
