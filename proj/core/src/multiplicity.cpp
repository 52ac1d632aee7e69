#include "curalg/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace curalg {

std::int64_t MultiplicityTable::get(const Weight& lambda, int r) const {
  auto it = entries.find({lambda, r});
  return it == entries.end() ? 0 : it->second;
}

void MultiplicityTable::add(const Weight& lambda, int r, std::int64_t m) {
  if (m == 0) return;
  auto [it, inserted] = entries.try_emplace({lambda, r}, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) entries.erase(it);
  }
}

bool MultiplicityTable::nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second >= 0; });
}

bool peel_before(const RootDatum& d, const Weight& a, const Weight& b) {
  Rational ha = d.height(a), hb = d.height(b);
  if (ha != hb) return ha > hb;
  return a < b;
}

namespace {

// Leading weight of the residual: first in peel order among the given grade
// (or all grades when grade is empty).
std::optional<std::pair<Weight, int>> leading(const RootDatum& d, const GradedCharacter& res,
                                              std::optional<int> grade) {
  std::optional<std::pair<Weight, int>> best;
  for (const auto& [k, v] : res.entries()) {
    if (grade && k.grade != *grade) continue;
    if (!best || peel_before(d, k.weight, best->first) ||
        (k.weight == best->first && k.grade < best->second))
      best = std::make_pair(k.weight, k.grade);
  }
  if (best && !d.is_dominant(best->first))
    throw std::invalid_argument("character residue is supported on a non-dominant leading weight " +
                                to_string(best->first));
  return best;
}

GradedCharacter without_window(const GradedCharacter& chi) {
  GradedCharacter c;
  for (const auto& [k, v] : chi.entries()) c.add_term(k.weight, k.grade, v);
  return c;
}

}  // namespace

MultiplicityTable decompose_into_simples(const RootDatum& d, const GradedCharacter& chi) {
  MultiplicityTable t;
  t.valid_floor = chi.floor();
  GradedCharacter res = without_window(chi);
  while (auto lead = leading(d, res, std::nullopt)) {
    const auto& [mu, s] = *lead;
    std::int64_t m = res.coefficient(mu, s);
    t.add(mu, s, m);
    res = res - simple_graded_character(d, mu, s).scaled(m);
  }
  return t;
}

MultiplicityTable decompose_into_deltas(const RootDatum& d, const GradedCharacter& chi) {
  if (chi.bounded_below_only()) throw WindowError("decompose_into_deltas: character is not bounded above");
  MultiplicityTable t;
  GradedCharacter res = without_window(chi);
  int margin = 0;
  while (auto lead = leading(d, res, std::nullopt)) {
    const auto& [mu, s] = *lead;
    std::int64_t m = res.coefficient(mu, s);
    t.add(mu, s, m);
    GradedCharacter delta = delta_character(d, mu, s);
    margin = std::max(margin, *delta.top_grade() - *delta.min_grade());
    res = res - delta.scaled(m);
    // Below a floor the residual is unknown; drop what falls under it.
    if (chi.floor()) res = res.restricted_to(*chi.floor());
    if (chi.floor()) res = without_window(res);
  }
  // Standard modules starting below the floor may reach up to floor + spread.
  if (chi.floor()) {
    t.valid_floor = *chi.floor() + margin;
    for (auto it = t.entries.begin(); it != t.entries.end();)
      it = it->first.second < *t.valid_floor ? t.entries.erase(it) : std::next(it);
  }
  return t;
}

MultiplicityTable decompose_into_nablas(const RootDatum& d, const GradedCharacter& chi, int floor) {
  if (chi.bounded_below_only()) throw WindowError("decompose_into_nablas: character is not bounded above");
  if (chi.floor() && floor < *chi.floor())
    throw WindowError("decompose_into_nablas: requested floor " + std::to_string(floor) +
                      " lies below the character floor " + std::to_string(*chi.floor()));
  MultiplicityTable t;
  t.valid_floor = floor;
  GradedCharacter res = without_window(chi).restricted_to(floor);
  res = without_window(res);
  auto top = res.top_grade();
  if (!top) return t;
  for (int g = *top; g >= floor; --g)
    while (auto lead = leading(d, res, g)) {
      const auto& [mu, s] = *lead;
      std::int64_t m = res.coefficient(mu, s);
      t.add(mu, s, m);
      res = without_window(res - nabla_character(d, mu, s, floor).scaled(m));
    }
  return t;
}

GradedCharacter recombine(const RootDatum& d, Family f, const MultiplicityTable& t, std::optional<int> floor) {
  GradedCharacter out;
  if (f == Family::Nabla && !floor) throw std::invalid_argument("recombine: nabla family needs a floor");
  if (floor) out.set_floor(*floor);
  for (const auto& [key, m] : t.entries) {
    const auto& [lambda, r] = key;
    GradedCharacter c = family_character(d, f, lambda, r, floor.value_or(0));
    if (floor) c = c.restricted_to(*floor);
    out = out + c.scaled(m);
  }
  return out;
}

}  // namespace curalg
