#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "curalg/weight.hpp"

namespace curalg {

// Thrown when a coefficient outside the exact window of a truncated
// character is requested.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CharKey {
  int grade;
  Weight weight;
  friend bool operator==(const CharKey&, const CharKey&) = default;
};

// Canonical order: grade descending, then weight lexicographic.
struct CharKeyLess {
  bool operator()(const CharKey& a, const CharKey& b) const {
    if (a.grade != b.grade) return a.grade > b.grade;
    return a.weight < b.weight;
  }
};

// Element of Z[P]((u)). A character with a floor is exact only at grades
// >= floor. A character with a ceiling is bounded below and exact only at
// grades <= ceiling; it arises as the dual of a truncated character.
class GradedCharacter {
 public:
  using Map = std::map<CharKey, std::int64_t, CharKeyLess>;

  GradedCharacter() = default;
  static GradedCharacter monomial(const Weight& w, int grade, std::int64_t coeff = 1);

  void add_term(const Weight& w, int grade, std::int64_t coeff);
  std::int64_t coefficient(const Weight& w, int grade) const;
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::optional<int> top_grade() const;
  std::optional<int> min_grade() const;
  std::optional<int> floor() const { return floor_; }
  std::optional<int> ceiling() const { return ceiling_; }
  bool is_finite() const { return !floor_ && !ceiling_; }
  bool bounded_below_only() const { return ceiling_.has_value(); }
  bool exact_at(int grade) const;

  // Marks the character as truncated: entries below f are dropped.
  void set_floor(int f);
  void set_ceiling(int c);
  GradedCharacter restricted_to(int floor_grade) const;

  GradedCharacter operator+(const GradedCharacter& o) const;
  GradedCharacter operator-(const GradedCharacter& o) const;
  GradedCharacter scaled(std::int64_t k) const;
  GradedCharacter at_grade(int grade) const;

  std::map<int, std::int64_t> dims_by_grade() const;
  std::int64_t total_dim() const;
  bool nonnegative() const;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);

 private:
  Map entries_;
  std::optional<int> floor_;
  std::optional<int> ceiling_;
};

GradedCharacter multiply(const GradedCharacter& a, const GradedCharacter& b);
GradedCharacter shift(const GradedCharacter& c, int r);
GradedCharacter dual(const GradedCharacter& c);

std::string debug_string(const GradedCharacter& c);

}  // namespace curalg
