#include "curalg/env_element.hpp"

#include <sstream>
#include <stdexcept>

#include "curalg/truncated_module.hpp"

namespace curalg {

EnvElement EnvElement::one() { return word({}); }

EnvElement EnvElement::letter(int x, int degree) {
  if (degree < 0) throw std::invalid_argument("negative t-degree");
  return word({Letter{x, degree}});
}

EnvElement EnvElement::word(const Word& w, const Rational& c) {
  EnvElement e;
  e.add(w, c);
  return e;
}

void EnvElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

EnvElement EnvElement::operator+(const EnvElement& o) const {
  EnvElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

EnvElement EnvElement::operator-(const EnvElement& o) const { return *this + o.scaled(-1); }

EnvElement EnvElement::operator*(const EnvElement& o) const {
  EnvElement r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add(w, ca * cb);
    }
  return r;
}

EnvElement EnvElement::scaled(const Rational& c) const {
  EnvElement r;
  if (c == 0) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

int EnvElement::grade() const {
  int g = 0;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    int s = 0;
    for (const auto& l : w) s += l.degree;
    if (!first && s != g) throw std::invalid_argument("element is not grade-homogeneous");
    g = s;
    first = false;
  }
  return g;
}

Weight EnvElement::weight(const LieAlgebra& g) const {
  Weight result = Weight::zero(g.rank());
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Weight s = Weight::zero(g.rank());
    for (const auto& l : w) s += g.weight(l.x);
    if (!first && s != result) throw std::invalid_argument("element is not weight-homogeneous");
    result = s;
    first = false;
  }
  return result;
}

bool EnvElement::homogeneous(const LieAlgebra& g) const {
  try {
    (void)grade();
    (void)weight(g);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string EnvElement::to_string(const LieAlgebra& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << curalg::to_string(c);
    for (const auto& l : w) os << "*" << g.name(l.x) << "t" << l.degree;
  }
  return os.str();
}

bool is_pbw_ordered(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[i - 1]) return false;
  return true;
}

namespace {

// Replaces u a b v (a > b) by u b a v + u [a,b] v.
void swap_at(const LieAlgebra& g, const Word& w, const Rational& c, std::size_t i, EnvElement& out) {
  Word swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  out.add(swapped, c);
  const Letter a = w[i], b = w[i + 1];
  for (const auto& [z, k] : g.bracket(a.x, b.x)) {
    Word shorter;
    shorter.reserve(w.size() - 1);
    shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(i));
    shorter.push_back(Letter{z, a.degree + b.degree});
    shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    out.add(shorter, c * k);
  }
}

template <class Pick>
EnvElement normalize(const LieAlgebra& g, const EnvElement& e, Pick pick) {
  EnvElement done;
  EnvElement pending = e;
  while (!pending.is_zero()) {
    EnvElement next;
    for (const auto& [w, c] : pending.terms()) {
      std::vector<std::size_t> descents;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) descents.push_back(i);
      if (descents.empty()) {
        done.add(w, c);
        continue;
      }
      swap_at(g, w, c, pick(descents), next);
    }
    pending = std::move(next);
  }
  return done;
}

}  // namespace

EnvElement normal_form(const LieAlgebra& g, const EnvElement& e) {
  return normalize(g, e, [](const std::vector<std::size_t>& d) { return d.front(); });
}

EnvElement normal_form_random(const LieAlgebra& g, const EnvElement& e, std::mt19937_64& rng) {
  return normalize(g, e, [&](const std::vector<std::size_t>& d) {
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    return d[pick(rng)];
  });
}

EnvElement multiply_normal(const LieAlgebra& g, const EnvElement& a, const EnvElement& b) {
  return normal_form(g, a * b);
}

EnvElement cartan_projection(const LieAlgebra& g, const EnvElement& normal) {
  EnvElement out;
  for (const auto& [w, c] : normal.terms()) {
    bool pure = true;
    for (const auto& l : w)
      if (g.part(l.x) != LieAlgebra::Part::Cartan) {
        pure = false;
        break;
      }
    if (pure) out.add(w, c);
  }
  return out;
}

SparseVector apply(const TruncatedModule& m, const EnvElement& e, const SparseVector& v) {
  SparseAccumulator acc;
  for (const auto& [w, c] : e.terms()) {
    SparseVector cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it) cur = m.apply(it->x, it->degree, cur);
    acc.add_scaled(cur, c);
  }
  return acc.take();
}

}  // namespace curalg
