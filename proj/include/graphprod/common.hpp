#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphprod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex label: a prime power >= 2 or infinity. Element orders reuse the
// type; there any value >= 1 can occur.
struct Order {
  std::int64_t n = 0;  // 0 encodes infinity

  static Order inf() { return {}; }
  static Order finite(std::int64_t v) { return {v}; }
  bool is_finite() const { return n != 0; }
  bool operator==(const Order&) const = default;
};

std::string to_string(const Order& o);

bool is_prime_power(std::int64_t n);

// Set of vertex indices. Graphs are capped at 64 vertices so a word of
// bits is enough.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet all(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  bool contains(int v) const { return bits >> v & 1; }
  void add(int v) { bits |= std::uint64_t{1} << v; }
  void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b;) {
      int v = std::countr_zero(b);
      out.push_back(v);
      b &= b - 1;
    }
    return out;
  }

  bool operator==(const VertexSet&) const = default;
  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace graphprod
