#include "curalg/irreducible.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace curalg {

namespace {

// Exterior power Lambda^k of the natural module, basis = sorted k-subsets.
struct Wedge {
  int n1;  // dimension of the natural module
  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> index;

  Wedge(int n1_, int k) : n1(n1_) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == k) {
        index[cur] = static_cast<int>(subsets.size());
        subsets.push_back(cur);
        return;
      }
      for (int i = start; i < n1; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }

  // E_ab applied to basis element s; returns (index, sign) or index -1.
  std::pair<int, int> apply_unit(int a, int b, int s) const {
    const auto& set = subsets[static_cast<std::size_t>(s)];
    bool has_b = std::find(set.begin(), set.end(), b) != set.end();
    if (!has_b) return {-1, 0};
    if (a == b) return {s, 1};
    if (std::find(set.begin(), set.end(), a) != set.end()) return {-1, 0};
    std::vector<int> out;
    int between = 0;
    for (int v : set) {
      if (v == b) continue;
      if ((v > std::min(a, b)) && (v < std::max(a, b))) ++between;
      out.push_back(v);
    }
    out.push_back(a);
    std::sort(out.begin(), out.end());
    return {index.at(out), between % 2 ? -1 : 1};
  }
};

}  // namespace

TruncatedModule irreducible_module(std::shared_ptr<const LieAlgebra> g, const Weight& lambda, int r) {
  const RootDatum& d = g->root_data();
  if (!d.is_dominant(lambda)) throw std::invalid_argument("irreducible_module: weight is not dominant");
  const int n = d.rank();
  // Tensor product of fundamental modules Lambda^i, omega_i taken lambda_i times.
  std::vector<Wedge> factors;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < lambda[i]; ++c) factors.emplace_back(n + 1, i + 1);
  std::vector<std::size_t> radix;
  for (const auto& f : factors) radix.push_back(f.subsets.size());
  auto decode = [&](std::size_t idx) {
    std::vector<int> digits(factors.size());
    for (std::size_t f = factors.size(); f-- > 0;) {
      digits[f] = static_cast<int>(idx % radix[f]);
      idx /= radix[f];
    }
    return digits;
  };
  auto encode = [&](const std::vector<int>& digits) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) idx = idx * radix[f] + static_cast<std::size_t>(digits[f]);
    return idx;
  };
  std::size_t ambient = 1;
  for (auto x : radix) ambient *= x;

  auto act = [&](int x, const SparseVector& v) {
    SparseAccumulator acc;
    for (const auto& [idx, c] : v.entries()) {
      auto digits = decode(idx);
      for (std::size_t f = 0; f < factors.size(); ++f)
        for (const auto& me : g->natural(x)) {
          auto [t, sign] = factors[f].apply_unit(me.row, me.col, digits[f]);
          if (t < 0) continue;
          auto nd = digits;
          nd[f] = t;
          acc.add(encode(nd), c * sign * me.coeff);
        }
    }
    return acc.take();
  };

  // Highest weight vector: each factor e_0 ^ ... ^ e_{k-1}, which is subset index 0.
  std::vector<int> top(factors.size(), 0);
  SparseVector hw = SparseVector::unit(encode(top));

  // Basis of each weight space: the echelon rows, in insertion order.
  std::map<Weight, Echelon> spaces;
  std::deque<std::pair<Weight, SparseVector>> queue;
  spaces.emplace(lambda, Echelon(ambient));
  spaces.at(lambda).insert(hw);
  queue.emplace_back(lambda, hw);
  while (!queue.empty()) {
    auto [w, v] = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      SparseVector u = act(g->f(i), v);
      if (u.empty()) continue;
      Weight nw = w - d.simple_root(i);
      auto it = spaces.try_emplace(nw, Echelon(ambient)).first;
      if (auto row = it->second.insert(u)) queue.emplace_back(nw, it->second.rows()[*row]);
    }
  }
  std::vector<BasisLabel> labels;
  std::vector<std::pair<Weight, std::size_t>> ids;
  std::map<Weight, std::size_t> offset;
  for (const auto& [w, e] : spaces) {
    offset[w] = ids.size();
    for (std::size_t k = 0; k < e.rank(); ++k) {
      labels.push_back(BasisLabel{r, w});
      ids.emplace_back(w, k);
    }
  }
  TruncatedModule m(g, labels, 0);
  for (int x = 0; x < g->dim(); ++x) {
    SparseMatrix& a = m.mutable_action(x, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto& [w, k] = ids[i];
      SparseVector img = act(x, spaces.at(w).rows()[k]);
      if (img.empty()) continue;
      Weight tw = w + g->weight(x);
      auto it = spaces.find(tw);
      if (it == spaces.end()) throw std::logic_error("irreducible_module: image outside weight support");
      SparseVector used;
      if (!it->second.reduce_tracking(img, used).empty()) throw std::logic_error("irreducible_module: not invariant");
      SparseAccumulator col;
      for (const auto& [row, c] : used.entries()) col.add(offset.at(tw) + row, c);
      a.columns[i] = col.take();
    }
  }
  return m;
}

}  // namespace curalg
