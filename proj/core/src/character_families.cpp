#include "curalg/character_families.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "curalg/presentation.hpp"

namespace curalg {

std::string family_name(Family f) {
  switch (f) {
    case Family::Simple: return "simple";
    case Family::Delta: return "delta";
    case Family::Nabla: return "nabla";
    case Family::GlobalWeyl: return "globalweyl";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "simple") return Family::Simple;
  if (name == "delta") return Family::Delta;
  if (name == "nabla") return Family::Nabla;
  if (name == "globalweyl") return Family::GlobalWeyl;
  throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

using CacheKey = std::tuple<char, int, int, std::vector<int>, int, int>;

template <class V>
class Memo {
 public:
  template <class F>
  V get(const CacheKey& key, F compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<CacheKey, V> map_;
};

Memo<GradedCharacter>& char_cache() {
  static Memo<GradedCharacter> m;
  return m;
}

Memo<std::shared_ptr<const TruncatedModule>>& module_cache() {
  static Memo<std::shared_ptr<const TruncatedModule>> m;
  return m;
}

CacheKey key(const RootDatum& d, Family f, const Weight& lambda, int r, int floor) {
  return {d.lie_type(), d.rank(), static_cast<int>(f), lambda.c, r, floor};
}

void require_dominant(const RootDatum& d, const Weight& lambda) {
  if (lambda.rank() != d.rank()) throw std::invalid_argument("weight rank does not match the root datum");
  if (!d.is_dominant(lambda)) throw std::invalid_argument("label weight " + to_string(lambda) + " is not dominant");
}

}  // namespace

std::shared_ptr<const LieAlgebra> lie_algebra(char type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::shared_ptr<const LieAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{type, rank}];
  if (!slot) slot = LieAlgebra::make(type, rank);
  return slot;
}

GradedCharacter simple_graded_character(const RootDatum& d, const Weight& lambda, int r) {
  require_dominant(d, lambda);
  return char_cache().get(key(d, Family::Simple, lambda, r, 0),
                          [&] { return shift(freudenthal_character(d, lambda), r); });
}

std::shared_ptr<const TruncatedModule> delta_module(const RootDatum& d, const Weight& lambda, int r) {
  require_dominant(d, lambda);
  return module_cache().get(key(d, Family::Delta, lambda, r, 0), [&] {
    auto g = lie_algebra(d.lie_type(), d.rank());
    return std::make_shared<const TruncatedModule>(local_weyl_module(g, lambda, r));
  });
}

int delta_spread(const RootDatum& d, const Weight& lambda) {
  auto m = delta_module(d, lambda, 0);
  return *m->max_grade() - *m->min_grade();
}

GradedCharacter delta_character(const RootDatum& d, const Weight& lambda, int r) {
  require_dominant(d, lambda);
  return char_cache().get(key(d, Family::Delta, lambda, r, 0), [&] {
    if (r != 0) return shift(delta_character(d, lambda, 0), r);
    return delta_module(d, lambda, 0)->character();
  });
}

GradedCharacter global_weyl_character(const RootDatum& d, const Weight& lambda, int r, int floor) {
  require_dominant(d, lambda);
  if (floor > r) throw std::invalid_argument("global_weyl_character: floor must not exceed r");
  return char_cache().get(key(d, Family::GlobalWeyl, lambda, r, floor), [&] {
    if (r != 0) return shift(global_weyl_character(d, lambda, 0, floor - r), r);
    auto g = lie_algebra(d.lie_type(), d.rank());
    return global_weyl_slice(g, lambda, 0, -floor).character();
  });
}

GradedCharacter nabla_character(const RootDatum& d, const Weight& lambda, int r, int floor) {
  require_dominant(d, lambda);
  if (floor > r) {
    GradedCharacter empty;
    empty.set_floor(floor);
    return empty;
  }
  return char_cache().get(key(d, Family::Nabla, lambda, r, floor), [&] {
    // nabla(lambda, r) = W(-w0 lambda, -r)^*, so grades r - k come from W grades -r + k.
    GradedCharacter w = global_weyl_character(d, d.minus_w0(lambda), 0, floor - r);
    return shift(dual(w), r);
  });
}

GradedCharacter family_character(const RootDatum& d, Family f, const Weight& lambda, int r, int floor) {
  switch (f) {
    case Family::Simple: return simple_graded_character(d, lambda, r);
    case Family::Delta: return delta_character(d, lambda, r);
    case Family::Nabla: return nabla_character(d, lambda, r, floor);
    case Family::GlobalWeyl: return global_weyl_character(d, lambda, r, floor);
  }
  throw std::logic_error("unknown family");
}

void clear_character_cache() {
  char_cache().clear();
  module_cache().clear();
}

std::size_t character_cache_size() { return char_cache().size() + module_cache().size(); }

}  // namespace curalg
