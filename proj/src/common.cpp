#include "graphprod/common.hpp"

namespace graphprod {

std::string to_string(const Order& o) {
  return o.is_finite() ? std::to_string(o.n) : "inf";
}

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;  // n itself prime
  while (n % p == 0) n /= p;
  return n == 1;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

}  // namespace graphprod
