#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace curalg {

// Integral weight in the basis of fundamental weights.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  Weight& operator+=(const Weight& o);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);  // "[a,b]"
// Inverse of to_string; spaces are ignored. Throws std::invalid_argument.
Weight parse_weight(const std::string& text);
// "[[a,b],[c,d]]"
std::vector<Weight> parse_weight_list(const std::string& text);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace curalg
