#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace posetpack {

// Arbitrary-precision natural number. Exact arithmetic only: subtraction
// below zero and division by zero throw. Magnitudes in this project stay
// in the hundreds of decimal digits (factorials and central binomials), so
// schoolbook algorithms are plenty.
class BigNat {
public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  static BigNat from_decimal(const std::string& digits);
  static BigNat factorial(unsigned n);
  static BigNat binomial(std::uint64_t n, std::uint64_t k);
  static BigNat pow(const BigNat& base, unsigned exp);
  static BigNat gcd(BigNat a, BigNat b);

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;

  // Fits-check plus value; throws RangeError when the value exceeds 64 bits.
  std::uint64_t to_u64() const;
  std::string to_string() const;

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator-=(const BigNat& rhs);
  BigNat& operator*=(const BigNat& rhs);

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator-(BigNat lhs, const BigNat& rhs) { return lhs -= rhs; }
  friend BigNat operator*(const BigNat& lhs, const BigNat& rhs);
  friend BigNat operator/(const BigNat& lhs, const BigNat& rhs) {
    return divmod(lhs, rhs).first;
  }
  friend BigNat operator%(const BigNat& lhs, const BigNat& rhs) {
    return divmod(lhs, rhs).second;
  }

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);
  friend bool operator==(const BigNat& a, const BigNat& b) {
    return a.limbs_ == b.limbs_;
  }

private:
  // Little-endian base-2^32 limbs, no trailing zero limbs; empty means 0.
  std::vector<std::uint32_t> limbs_;

  void trim();
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i);
  void shift_left_one_and_or(bool low_bit);
  std::uint32_t divmod_small(std::uint32_t divisor);  // in place, returns rem
  void mul_small(std::uint32_t factor);
  void add_small(std::uint32_t value);
};

}  // namespace posetpack
