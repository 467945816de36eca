#pragma once

#include <compare>
#include <string>

#include "posetpack/bignat.hpp"

namespace posetpack {

// Nonnegative exact rational, always reduced. Report ratios are compared and
// rendered through this type so asymptotic checks never touch floating point.
class BigRat {
public:
  BigRat() : num_(0), den_(1) {}
  BigRat(BigNat numerator, BigNat denominator);  // reduces; denominator != 0
  BigRat(std::uint64_t numerator, std::uint64_t denominator)
      : BigRat(BigNat{numerator}, BigNat{denominator}) {}

  const BigNat& num() const { return num_; }
  const BigNat& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  BigRat operator+(const BigRat& rhs) const;
  BigRat operator-(const BigRat& rhs) const;  // requires *this >= rhs
  BigRat operator*(const BigRat& rhs) const;
  BigRat operator/(const BigRat& rhs) const;  // rhs != 0

  std::strong_ordering operator<=>(const BigRat& rhs) const;
  bool operator==(const BigRat& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  // "num/den"; integers render without the denominator.
  std::string to_fraction_string() const;

  // Round-to-nearest decimal with `significant` significant digits; falls
  // back to exponent notation outside a readable magnitude range.
  std::string to_decimal_string(int significant = 6) const;

private:
  BigNat num_;
  BigNat den_;
};

}  // namespace posetpack
