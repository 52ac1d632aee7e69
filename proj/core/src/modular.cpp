#include "modular.hpp"

#include <cmath>

namespace curalg::modular {

std::optional<u64> Field::from(const Rational& q) const {
  u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  return mul(num, inv(den));
}

std::optional<Rational> Field::reconstruct(u64 a) const {
  if (a == 0) return Rational(0);
  const u64 bound = static_cast<u64>(std::sqrt(static_cast<long double>(p) / 2));
  // Extended Euclid on (p, a), stopping once the remainder drops below bound.
  __int128 r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 >= static_cast<__int128>(bound)) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  __int128 num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den >= static_cast<__int128>(bound)) return std::nullopt;
  Rational out(mpz_class(std::to_string(static_cast<long long>(num))),
               mpz_class(std::to_string(static_cast<long long>(den))));
  out.canonicalize();
  return out;
}

std::optional<std::size_t> DenseEchelon::insert(std::vector<u64> v) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const u64 c = v[pivots_[r]];
    if (c == 0) continue;
    const auto& row = rows_[r];
    const u64 m = f_.neg(c);
    for (std::size_t i = 0; i < dim_; ++i)
      if (row[i]) v[i] = f_.add(v[i], f_.mul(m, row[i]));
  }
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return std::nullopt;
  const u64 inv = f_.inv(v[p]);
  for (std::size_t i = p; i < dim_; ++i)
    if (v[i]) v[i] = f_.mul(v[i], inv);
  for (auto& row : rows_) {
    const u64 c = row[p];
    if (c == 0) continue;
    const u64 m = f_.neg(c);
    for (std::size_t i = p; i < dim_; ++i)
      if (v[i]) row[i] = f_.add(row[i], f_.mul(m, v[i]));
  }
  pivot_row_[p] = static_cast<long>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
  return rows_.size() - 1;
}


namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Small Small::make(__int128 n, __int128 d) {
  if (n == 0) return Small{};
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd128(n, d);
  n /= g;
  d /= g;
  constexpr __int128 lim = static_cast<__int128>(1) << 62;
  if (n >= lim || n <= -lim || d >= lim) throw Overflow{};
  return Small{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

Small Small::from(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw Overflow{};
  return make(q.get_num().get_si(), q.get_den().get_si());
}

Rational Small::exact() const {
  Rational q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
  q.canonicalize();
  return q;
}

Small operator+(const Small& a, const Small& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  if (a.d == b.d) return Small::make(static_cast<__int128>(a.n) + b.n, a.d);
  return Small::make(static_cast<__int128>(a.n) * b.d + static_cast<__int128>(b.n) * a.d,
                     static_cast<__int128>(a.d) * b.d);
}

Small operator*(const Small& a, const Small& b) {
  if (a.n == 0 || b.n == 0) return Small{};
  return Small::make(static_cast<__int128>(a.n) * b.n, static_cast<__int128>(a.d) * b.d);
}

}  // namespace curalg::modular
