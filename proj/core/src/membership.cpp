#include "isosquare/membership.hpp"

#include <string>

#include "isosquare/errors.hpp"

namespace isosquare {

namespace {

void require_positive(const Natural& n) {
  if (n <= 0) throw InvalidArgument("n must be a positive integer");
}

}  // namespace

PropertyTriple::PropertyTriple(unsigned base, unsigned multiplier, unsigned power)
    : base_(base), multiplier_(multiplier), power_(power) {
  if (base < 2) throw InvalidArgument("property triple: base must be >= 2");
  if (multiplier < 1) throw InvalidArgument("property triple: multiplier must be >= 1");
  if (power < 2) throw InvalidArgument("property triple: power must be >= 2");
}

bool satisfies(const Natural& n, const PropertyTriple& triple) {
  require_positive(n);
  if (triple == PropertyTriple::isosquare()) return is_isosquare(n);
  const Natural power = boost::multiprecision::pow(n, triple.power());
  return digit_sum(n, triple.base()) ==
         static_cast<std::uint64_t>(triple.multiplier()) * digit_sum(power, triple.base());
}

bool is_isosquare(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("n must be a positive integer");
  return detail::isosquare_word(n);
}

bool is_isosquare(const Natural& n) {
  require_positive(n);
  if (bit_length(n) <= 64) return detail::isosquare_word(n.convert_to<std::uint64_t>());
  return hamming_weight(n) == hamming_weight(n * n);
}

WeightProfile weight_profile(const Natural& n) {
  require_positive(n);
  WeightProfile profile;
  profile.n = n;
  profile.weight = hamming_weight(n);
  profile.square_weight = hamming_weight(n * n);
  profile.defect = static_cast<std::int64_t>(profile.square_weight) -
                   2 * static_cast<std::int64_t>(profile.weight);
  return profile;
}

std::int64_t square_defect(const Natural& n) { return weight_profile(n).defect; }

Rational stolarsky_ratio(const Natural& n, unsigned m) {
  require_positive(n);
  if (m < 2) throw InvalidArgument("stolarsky_ratio: power must be >= 2");
  const Natural power = boost::multiprecision::pow(n, m);
  return Rational(Natural(hamming_weight(power)), Natural(hamming_weight(n)));
}

}  // namespace isosquare
