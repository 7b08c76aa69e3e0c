#include "isosquare/digits.hpp"

#include <string>

#include "isosquare/errors.hpp"

namespace isosquare {

namespace mp = boost::multiprecision;

std::uint64_t hamming_weight(const Natural& n) {
  require_non_negative(n, "n");
  const auto& backend = n.backend();
  const auto* limbs = backend.limbs();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < backend.size(); ++i) {
    total += static_cast<std::uint64_t>(std::popcount(limbs[i]));
  }
  return total;
}

std::uint64_t bit_length(const Natural& n) {
  require_non_negative(n, "n");
  if (n == 0) return 0;
  return static_cast<std::uint64_t>(mp::msb(n)) + 1;
}

std::uint64_t digit_sum(const Natural& n, unsigned base) {
  if (base < 2) throw InvalidArgument("digit_sum: base must be >= 2, got " + std::to_string(base));
  require_non_negative(n, "n");
  if (base == 2) return hamming_weight(n);

  std::uint64_t total = 0;
  Natural rest = n;
  Natural quotient;
  Natural digit;
  while (rest != 0) {
    mp::divide_qr(rest, Natural(base), quotient, digit);
    total += digit.convert_to<std::uint64_t>();
    rest.swap(quotient);
  }
  return total;
}

Natural complement(const Natural& n, std::uint64_t k) {
  require_non_negative(n, "n");
  if (bit_length(n) > k) {
    throw PreconditionViolation("complement: n must be < 2^k (k=" + std::to_string(k) + ")");
  }
  return pow2(k) - n - 1;
}

BitPattern::BitPattern(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].digit > 1) throw InvalidArgument("bit pattern: run digit must be 0 or 1");
    if (runs_[i].length == 0) throw InvalidArgument("bit pattern: run length must be >= 1");
    if (i > 0 && runs_[i].digit == runs_[i - 1].digit) {
      throw InvalidArgument("bit pattern: adjacent runs must carry different digits");
    }
  }
}

BitPattern BitPattern::from_bits(std::string_view bits) {
  std::vector<Run> runs;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("bit pattern: unexpected character '" + std::string(1, c) + "'");
    const auto digit = static_cast<std::uint8_t>(c - '0');
    if (!runs.empty() && runs.back().digit == digit) {
      ++runs.back().length;
    } else {
      runs.push_back({digit, 1});
    }
  }
  return BitPattern(std::move(runs));
}

std::uint64_t BitPattern::digit_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto& run : runs_) total += run.length;
  return total;
}

std::uint64_t BitPattern::weight() const noexcept {
  std::uint64_t total = 0;
  for (const auto& run : runs_) total += run.digit * run.length;
  return total;
}

std::string BitPattern::to_string() const {
  std::string out;
  for (const auto& run : runs_) {
    out += static_cast<char>('0' + run.digit);
    if (run.length > 1) out += "_(" + std::to_string(run.length) + ")";
  }
  return out;
}

std::string BitPattern::to_bits() const {
  std::string out;
  out.reserve(digit_count());
  for (const auto& run : runs_) out.append(run.length, static_cast<char>('0' + run.digit));
  return out;
}

Natural pattern_to_value(const BitPattern& pattern) {
  Natural value = 0;
  for (const auto& run : pattern.runs()) {
    value <<= run.length;
    if (run.digit == 1) value += pow2(run.length) - 1;
  }
  return value;
}

BitPattern value_to_pattern(const Natural& n) {
  require_non_negative(n, "n");
  std::vector<Run> runs;
  const auto bits = bit_length(n);
  for (std::uint64_t i = bits; i-- > 0;) {
    const auto digit = static_cast<std::uint8_t>(mp::bit_test(n, static_cast<unsigned>(i)) ? 1 : 0);
    if (!runs.empty() && runs.back().digit == digit) {
      ++runs.back().length;
    } else {
      runs.push_back({digit, 1});
    }
  }
  return BitPattern(std::move(runs));
}

}  // namespace isosquare
