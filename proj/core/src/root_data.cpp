#include "curalg/root_data.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace curalg {

namespace {

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

RootDatum RootDatum::build(char lie_type, int rank) {
  if (lie_type != 'A') throw std::invalid_argument(std::string("unsupported Lie type '") + lie_type + "'");
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (rank > 8) throw std::invalid_argument("rank above 8 is not supported");
  RootDatum d;
  d.type_ = lie_type;
  d.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  d.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    d.cartan_[i][i] = 2;
    if (i + 1 < n) d.cartan_[i][i + 1] = d.cartan_[i + 1][i] = -1;
  }
  d.cartan_inverse_ = invert(d.cartan_);
  for (std::size_t i = 0; i < n; ++i) d.simple_roots_.emplace_back(d.cartan_[i]);
  // Type A positive roots are the sums alpha_i + ... + alpha_{j-1}.
  for (int len = 1; len <= rank; ++len)
    for (int i = 0; i + len <= rank; ++i) {
      Weight r = Weight::zero(rank);
      for (int k = i; k < i + len; ++k) r += d.simple_roots_[static_cast<std::size_t>(k)];
      d.positive_roots_.push_back(r);
    }
  std::stable_sort(d.positive_roots_.begin(), d.positive_roots_.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = d.height(a), hb = d.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (int i = 0; i < rank; ++i) d.minus_w0_.push_back(rank - 1 - i);
  return d;
}

Weight RootDatum::fundamental(int i) const {
  Weight w = Weight::zero(rank_);
  w[i] = 1;
  return w;
}

Weight RootDatum::rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank_), 1)); }

Weight RootDatum::minus_w0(const Weight& w) const {
  Weight out = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) out[minus_w0_[static_cast<std::size_t>(i)]] = w[i];
  // Valid on all of P because -w0 is linear; for type A it is the diagram flip.
  return out;
}

std::vector<Rational> RootDatum::root_coordinates(const Weight& w) const {
  // w = sum_i c_i alpha_i with alpha_i = row i of the Cartan matrix, so c = w C^{-1}.
  std::vector<Rational> c(static_cast<std::size_t>(rank_));
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += w.c[i] * cartan_inverse_[i][j];
    c[j] = s;
  }
  return c;
}

Rational RootDatum::inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (a.c[i] != 0 && b.c[j] != 0) s += a.c[i] * b.c[j] * cartan_inverse_[i][j];
  return s;
}

Weight RootDatum::reflect(const Weight& w, int i) const { return w - simple_root(i) * w[i]; }

bool RootDatum::is_dominant(const Weight& w) const {
  return std::all_of(w.c.begin(), w.c.end(), [](int x) { return x >= 0; });
}

Weight RootDatum::dominant_representative(const Weight& w) const {
  Weight cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i)
      if (cur[i] < 0) {
        cur = reflect(cur, i);
        moved = true;
      }
  }
  return cur;
}

bool RootDatum::in_root_lattice(const Weight& w) const {
  for (const auto& c : root_coordinates(w))
    if (c.get_den() != 1) return false;
  return true;
}

Rational RootDatum::height(const Weight& w) const {
  Rational s = 0;
  for (const auto& c : root_coordinates(w)) s += c;
  return 2 * s;
}

bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  for (const auto& c : d.root_coordinates(lambda - mu))
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < d.rank(); ++i) {
      Weight r = d.reflect(w, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_hull(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  for (const auto& c : d.root_coordinates(lambda - d.dominant_representative(mu)))
    if (c < 0) return false;
  return true;
}

std::vector<Weight> dominant_weights_below(const RootDatum& d, const Weight& lambda) {
  // Breadth-first descent by simple roots inside the hull.
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    if (d.is_dominant(w)) out.push_back(w);
    for (int i = 0; i < d.rank(); ++i) {
      Weight n = w - d.simple_root(i);
      if (in_hull(d, n, lambda) && seen.insert(n).second) queue.push_back(n);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = d.height(a), hb = d.height(b);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  return out;
}

std::vector<Weight> dominant_weights_by_height(const RootDatum& d, int max_height) {
  std::vector<Weight> out;
  std::vector<int> cur(static_cast<std::size_t>(d.rank()), 0);
  // Height of a dominant weight is at least the sum of its coordinates.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      Weight w(cur);
      if (d.height(w) <= max_height) out.push_back(w);
      return;
    }
    for (int v = 0; v <= max_height; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = d.height(a), hb = d.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

GradedCharacter freudenthal_character(const RootDatum& d, const Weight& lambda) {
  if (!d.is_dominant(lambda)) throw std::invalid_argument("freudenthal_character: weight is not dominant");
  // Candidate weights: lambda minus Q+ inside the hull, processed top down.
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  std::vector<Weight> order;
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    order.push_back(w);
    for (int i = 0; i < d.rank(); ++i) {
      Weight n = w - d.simple_root(i);
      if (in_hull(d, n, lambda) && seen.insert(n).second) queue.push_back(n);
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return d.height(a) > d.height(b); });
  const Weight rho = d.rho();
  const Rational top = d.inner(lambda + rho, lambda + rho);
  std::map<Weight, Rational> mult;
  mult[lambda] = 1;
  for (const Weight& mu : order) {
    if (mu == lambda) continue;
    Rational num = 0;
    for (const Weight& alpha : d.positive_roots()) {
      for (int k = 1;; ++k) {
        Weight nu = mu + alpha * k;
        if (!in_hull(d, nu, lambda)) break;
        auto it = mult.find(nu);
        if (it != mult.end() && it->second != 0) num += it->second * d.inner(nu, alpha);
      }
    }
    Rational den = top - d.inner(mu + rho, mu + rho);
    Rational m = 2 * num / den;
    if (m.get_den() != 1 || m < 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    mult[mu] = m;
  }
  GradedCharacter c;
  Rational total = 0;
  for (const auto& [w, m] : mult) {
    c.add_term(w, 0, m.get_num().get_si());
    total += m;
  }
  if (total != weyl_dimension(d, lambda)) throw std::logic_error("Freudenthal dimension disagrees with the Weyl dimension formula");
  return c;
}

Rational weyl_dimension(const RootDatum& d, const Weight& lambda) {
  const Weight rho = d.rho();
  Rational num = 1, den = 1;
  for (const Weight& alpha : d.positive_roots()) {
    num *= d.inner(lambda + rho, alpha);
    den *= d.inner(rho, alpha);
  }
  return num / den;
}

}  // namespace curalg
