#include "posetpack/rational.hpp"

#include <utility>

#include "posetpack/errors.hpp"

namespace posetpack {

BigRat::BigRat(BigNat numerator, BigNat denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw RangeError("rational with zero denominator");
  if (num_.is_zero()) {
    den_ = BigNat{1};
    return;
  }
  BigNat g = BigNat::gcd(num_, den_);
  if (BigNat{1} < g) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

BigRat BigRat::operator+(const BigRat& rhs) const {
  return BigRat(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

BigRat BigRat::operator-(const BigRat& rhs) const {
  return BigRat(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

BigRat BigRat::operator*(const BigRat& rhs) const {
  return BigRat(num_ * rhs.num_, den_ * rhs.den_);
}

BigRat BigRat::operator/(const BigRat& rhs) const {
  if (rhs.is_zero()) throw RangeError("rational division by zero");
  return BigRat(num_ * rhs.den_, den_ * rhs.num_);
}

std::strong_ordering BigRat::operator<=>(const BigRat& rhs) const {
  return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

std::string BigRat::to_fraction_string() const {
  if (den_ == BigNat{1}) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string BigRat::to_decimal_string(int significant) const {
  if (significant < 1) significant = 1;
  if (num_.is_zero()) return "0";

  // Scale so the integer quotient carries a couple of guard digits, then
  // round the digit string.
  const int digits_gap = static_cast<int>(num_.to_string().size()) -
                         static_cast<int>(den_.to_string().size());
  const int shift = significant + 2 - digits_gap;
  BigNat scaled_num = num_;
  BigNat scaled_den = den_;
  if (shift > 0) {
    scaled_num = scaled_num * BigNat::pow(BigNat{10}, static_cast<unsigned>(shift));
  } else if (shift < 0) {
    scaled_den = scaled_den * BigNat::pow(BigNat{10}, static_cast<unsigned>(-shift));
  }
  std::string digits = (scaled_num / scaled_den).to_string();
  // value = 0.digits * 10^exp10 after normalizing to a leading fraction
  int exp10 = static_cast<int>(digits.size()) - shift;

  // Round to `significant` digits (half-up), propagating carries.
  if (static_cast<int>(digits.size()) > significant) {
    bool round_up = digits[significant] >= '5';
    digits.resize(significant);
    if (round_up) {
      int i = significant - 1;
      while (i >= 0 && digits[i] == '9') digits[i--] = '0';
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        ++exp10;
        digits.resize(significant);
      } else {
        ++digits[i];
      }
    }
  } else {
    digits.append(significant - digits.size(), '0');
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  // Fixed notation when the magnitude is readable, else d.ddddde+XX.
  if (exp10 > significant + 2 || exp10 < -3) {
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    int e = exp10 - 1;
    return mant + "e" + (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  }
  if (exp10 <= 0) {
    return "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
  }
  if (static_cast<int>(digits.size()) <= exp10) {
    return digits + std::string(static_cast<std::size_t>(exp10) - digits.size(), '0');
  }
  return digits.substr(0, static_cast<std::size_t>(exp10)) + "." +
         digits.substr(static_cast<std::size_t>(exp10));
}

}  // namespace posetpack
