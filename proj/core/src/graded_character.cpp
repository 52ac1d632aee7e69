#include "curalg/graded_character.hpp"

#include <algorithm>
#include <sstream>

namespace curalg {

GradedCharacter GradedCharacter::monomial(const Weight& w, int grade, std::int64_t coeff) {
  GradedCharacter c;
  c.add_term(w, grade, coeff);
  return c;
}

void GradedCharacter::add_term(const Weight& w, int grade, std::int64_t coeff) {
  if (coeff == 0) return;
  if (floor_ && grade < *floor_) return;
  if (ceiling_ && grade > *ceiling_) return;
  auto [it, inserted] = entries_.try_emplace(CharKey{grade, w}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
  }
}

bool GradedCharacter::exact_at(int grade) const {
  if (floor_ && grade < *floor_) return false;
  if (ceiling_ && grade > *ceiling_) return false;
  return true;
}

std::int64_t GradedCharacter::coefficient(const Weight& w, int grade) const {
  if (!exact_at(grade))
    throw WindowError("grade " + std::to_string(grade) + " lies outside the exact window of a truncated character");
  auto it = entries_.find(CharKey{grade, w});
  return it == entries_.end() ? 0 : it->second;
}

std::optional<int> GradedCharacter::top_grade() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first.grade;
}

std::optional<int> GradedCharacter::min_grade() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first.grade;
}

void GradedCharacter::set_floor(int f) {
  if (ceiling_) throw std::logic_error("character already bounded below");
  floor_ = floor_ ? std::max(*floor_, f) : f;
  for (auto it = entries_.begin(); it != entries_.end();)
    it = it->first.grade < *floor_ ? entries_.erase(it) : std::next(it);
}

void GradedCharacter::set_ceiling(int c) {
  if (floor_) throw std::logic_error("character already truncated from below");
  ceiling_ = ceiling_ ? std::min(*ceiling_, c) : c;
  for (auto it = entries_.begin(); it != entries_.end();)
    it = it->first.grade > *ceiling_ ? entries_.erase(it) : std::next(it);
}

GradedCharacter GradedCharacter::restricted_to(int floor_grade) const {
  GradedCharacter c = *this;
  c.set_floor(floor_grade);
  return c;
}

namespace {

void merge_windows(GradedCharacter& out, const GradedCharacter& a, const GradedCharacter& b) {
  if ((a.floor() || b.floor()) && (a.ceiling() || b.ceiling()))
    throw std::logic_error("cannot combine characters truncated on opposite sides");
  if (a.floor() || b.floor()) out.set_floor(std::max(a.floor().value_or(INT32_MIN), b.floor().value_or(INT32_MIN)));
  if (a.ceiling() || b.ceiling())
    out.set_ceiling(std::min(a.ceiling().value_or(INT32_MAX), b.ceiling().value_or(INT32_MAX)));
}

}  // namespace

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  GradedCharacter out;
  merge_windows(out, *this, o);
  for (const auto& [k, v] : entries_) out.add_term(k.weight, k.grade, v);
  for (const auto& [k, v] : o.entries_) out.add_term(k.weight, k.grade, v);
  return out;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const { return *this + o.scaled(-1); }

GradedCharacter GradedCharacter::scaled(std::int64_t k) const {
  GradedCharacter out;
  out.floor_ = floor_;
  out.ceiling_ = ceiling_;
  if (k == 0) return out;
  for (const auto& [key, v] : entries_) out.entries_.emplace(key, v * k);
  return out;
}

GradedCharacter GradedCharacter::at_grade(int grade) const {
  GradedCharacter out;
  for (const auto& [k, v] : entries_)
    if (k.grade == grade) out.entries_.emplace(k, v);
  return out;
}

std::map<int, std::int64_t> GradedCharacter::dims_by_grade() const {
  std::map<int, std::int64_t> d;
  for (const auto& [k, v] : entries_) d[k.grade] += v;
  return d;
}

std::int64_t GradedCharacter::total_dim() const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

bool GradedCharacter::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
  return a.floor_ == b.floor_ && a.ceiling_ == b.ceiling_ && a.entries_.size() == b.entries_.size() &&
         std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), [](const auto& x, const auto& y) {
           return x.first.grade == y.first.grade && x.first.weight == y.first.weight && x.second == y.second;
         });
}

GradedCharacter multiply(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.bounded_below_only() || b.bounded_below_only())
    throw std::invalid_argument("multiply: factors must be bounded above");
  GradedCharacter out;
  // A product coefficient at grade n is exact once every contributing grade
  // of a truncated factor is exact.
  std::optional<int> f;
  auto consider = [&](const GradedCharacter& x, const GradedCharacter& y) {
    if (!x.floor()) return;
    int top = y.top_grade().value_or(INT32_MIN / 4);
    int cand = *x.floor() + top;
    f = f ? std::max(*f, cand) : cand;
  };
  consider(a, b);
  consider(b, a);
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) {
      int g = ka.grade + kb.grade;
      if (f && g < *f) continue;
      out.add_term(ka.weight + kb.weight, g, va * vb);
    }
  if (f) out.set_floor(*f);
  return out;
}

GradedCharacter shift(const GradedCharacter& c, int r) {
  GradedCharacter out;
  if (c.floor()) out.set_floor(*c.floor() + r);
  if (c.ceiling()) out.set_ceiling(*c.ceiling() + r);
  for (const auto& [k, v] : c.entries()) out.add_term(k.weight, k.grade + r, v);
  return out;
}

GradedCharacter dual(const GradedCharacter& c) {
  GradedCharacter out;
  if (c.floor()) out.set_ceiling(-*c.floor());
  if (c.ceiling()) out.set_floor(-*c.ceiling());
  for (const auto& [k, v] : c.entries()) out.add_term(-k.weight, -k.grade, v);
  return out;
}

std::string debug_string(const GradedCharacter& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : c.entries()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(k.weight) << "@" << k.grade << ":" << v;
  }
  os << "}";
  if (c.floor()) os << " floor " << *c.floor();
  if (c.ceiling()) os << " ceiling " << *c.ceiling();
  return os.str();
}

}  // namespace curalg
