#include "numeric.hpp"

#include <cmath>

namespace permrange {

double log10_approx(const BigInt& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  const BigInt a = abs(v);
  std::string s = a.str();
  size_t lead = std::min<size_t>(s.size(), 15);
  double head = std::stod(s.substr(0, lead));
  return std::log10(head) + static_cast<double>(s.size() - lead);
}

double log10_approx(const Rational& v) {
  return log10_approx(numerator(v)) - log10_approx(denominator(v));
}

}  // namespace permrange
