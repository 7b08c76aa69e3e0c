#include "isosquare/natural.hpp"

#include <cmath>

#include "isosquare/errors.hpp"

namespace isosquare {

Natural pow2(std::uint64_t exponent) {
  Natural result = 0;
  boost::multiprecision::bit_set(result, static_cast<unsigned>(exponent));
  return result;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("not a non-negative decimal integer: '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return value;
}

std::string to_decimal(const Natural& n) { return n.str(); }

double log2_natural(const Natural& n) {
  if (n <= 0) throw InvalidArgument("log2 of a non-positive value");
  const auto top = boost::multiprecision::msb(n);
  if (top < 63) return std::log2(static_cast<double>(n.convert_to<std::uint64_t>()));
  // Keep the leading 63 bits; the discarded tail only perturbs the last ulp.
  const auto shift = top - 62;
  const Natural head = n >> shift;
  return std::log2(static_cast<double>(head.convert_to<std::uint64_t>())) +
         static_cast<double>(shift);
}

void require_non_negative(const Natural& n, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + " must be non-negative");
}

}  // namespace isosquare
