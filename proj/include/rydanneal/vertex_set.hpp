#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rydanneal {

// Subset of vertices 1..N stored as a bitmask. Vertex i lives in bit i-1, so
// vertex 1 is the least significant bit; the same convention indexes the
// 2^N amplitude vector ({1, 3} with N = 4 is basis state 0b0101).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet from_indices(const std::vector<int>& vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int vertex) const { return (bits_ >> (vertex - 1)) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  std::vector<int> indices() const;

  // "{1, 3}"; the empty set prints as "{}".
  std::string to_string() const;
  // Most-significant-first bitstring of length n: {1, 3}, n = 4 -> "0101".
  std::string to_bitstring(int n) const;
  static VertexSet from_bitstring(const std::string& bits);
  // Parses "{1, 3}" / "{}".
  static VertexSet parse(const std::string& text);

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace rydanneal
