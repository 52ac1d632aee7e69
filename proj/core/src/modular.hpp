#pragma once

// Arithmetic modulo a word-sized prime, used to find relation spaces
// quickly before they are reconstructed and certified over Q.

#include <cstdint>
#include <optional>
#include <vector>

#include "curalg/sparse.hpp"

namespace curalg::modular {

using u64 = std::uint64_t;

inline constexpr u64 kPrimes[] = {4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL};

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  // Empty when p divides the denominator.
  std::optional<u64> from(const Rational& q) const;
  // Smallest-height rational congruent to a, if numerator and denominator
  // both fit below sqrt(p / 2).
  std::optional<Rational> reconstruct(u64 a) const;
};

// Row echelon form over F_p on dense rows, kept fully reduced.
class DenseEchelon {
 public:
  DenseEchelon(const Field& f, std::size_t dim) : f_(f), dim_(dim), pivot_row_(dim, -1) {}

  std::size_t rank() const { return rows_.size(); }
  const std::vector<u64>& row(std::size_t r) const { return rows_[r]; }
  std::size_t pivot_of(std::size_t r) const { return pivots_[r]; }

  // Returns the new row index if v was independent; v is consumed.
  std::optional<std::size_t> insert(std::vector<u64> v);

 private:
  Field f_;
  std::size_t dim_;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};


// Rational with 64-bit parts. Operations throw Overflow instead of wrapping;
// callers then redo the work with GMP rationals.
struct Small {
  struct Overflow {};

  std::int64_t n = 0;
  std::int64_t d = 1;

  static Small from(const Rational& q);
  static Small make(__int128 n, __int128 d);
  bool zero() const { return n == 0; }
  Rational exact() const;

  friend Small operator+(const Small& a, const Small& b);
  friend Small operator*(const Small& a, const Small& b);
  Small operator-() const { return Small{-n, d}; }
};

}  // namespace curalg::modular
