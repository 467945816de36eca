#include "posetpack/bignat.hpp"

#include <algorithm>
#include <cctype>

#include "posetpack/errors.hpp"

namespace posetpack {

namespace {
constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
}

BigNat::BigNat(std::uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigNat::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigNat::set_bit(std::size_t i) {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= (std::uint32_t{1} << (i % 32));
}

std::uint64_t BigNat::to_u64() const {
  if (limbs_.size() > 2) throw RangeError("BigNat value exceeds 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (*this < rhs) throw RangeError("BigNat subtraction would go negative");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) cur -= rhs.limbs_[i];
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  trim();
  return *this;
}

BigNat operator*(const BigNat& lhs, const BigNat& rhs) {
  BigNat out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t a = lhs.limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      // a*b + limb + carry < 2^64 because carry stays below 2^32.
      std::uint64_t cur = a * rhs.limbs_[j] + out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
  *this = *this * rhs;
  return *this;
}

void BigNat::mul_small(std::uint32_t factor) {
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  trim();
}

void BigNat::add_small(std::uint32_t value) {
  std::uint64_t carry = value;
  for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
    std::uint64_t cur = limbs_[i] + carry;
    limbs_[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

std::uint32_t BigNat::divmod_small(std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

void BigNat::shift_left_one_and_or(bool low_bit) {
  std::uint32_t carry = low_bit ? 1u : 0u;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw RangeError("BigNat division by zero");
  if (a < b) return {BigNat{}, a};
  BigNat quot, rem;
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    rem.shift_left_one_and_or(a.bit(i));
    if (!(rem < b)) {
      rem -= b;
      quot.set_bit(i);
    }
  }
  return {quot, rem};
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
  while (!b.is_zero()) {
    BigNat r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigNat BigNat::factorial(unsigned n) {
  BigNat out{1};
  for (unsigned i = 2; i <= n; ++i) out.mul_small(i);
  return out;
}

BigNat BigNat::binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigNat{};
  if (k > n - k) k = n - k;
  // Running product is divisible at each step, so division stays exact.
  BigNat out{1};
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = n - k + i;
    if (factor >> 32) {
      out *= BigNat{factor};
    } else {
      out.mul_small(static_cast<std::uint32_t>(factor));
    }
    out.divmod_small(static_cast<std::uint32_t>(i));
  }
  return out;
}

BigNat BigNat::pow(const BigNat& base, unsigned exp) {
  BigNat out{1};
  BigNat sq = base;
  while (exp) {
    if (exp & 1u) out *= sq;
    exp >>= 1;
    if (exp) sq *= sq;
  }
  return out;
}

BigNat BigNat::from_decimal(const std::string& digits) {
  if (digits.empty()) throw ParseError("empty decimal string");
  BigNat out;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid decimal digit in BigNat literal");
    out.mul_small(10);
    out.add_small(static_cast<std::uint32_t>(c - '0'));
  }
  return out;
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  BigNat tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t chunk = tmp.divmod_small(1'000'000'000u);
    if (tmp.is_zero()) {
      out.insert(0, std::to_string(chunk));
    } else {
      std::string part = std::to_string(chunk);
      out.insert(0, std::string(9 - part.size(), '0') + part);
    }
  }
  return out;
}

}  // namespace posetpack
