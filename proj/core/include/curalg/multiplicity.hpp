#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "curalg/character_families.hpp"
#include "curalg/graded_character.hpp"
#include "curalg/root_data.hpp"

namespace curalg {

// (lambda, r) -> multiplicity, valid at grades >= valid_floor when set.
struct MultiplicityTable {
  std::map<std::pair<Weight, int>, std::int64_t> entries;
  std::optional<int> valid_floor;

  std::int64_t get(const Weight& lambda, int r) const;
  void add(const Weight& lambda, int r, std::int64_t m);
  bool nonnegative() const;
  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

// Weight order used for peeling: height descending, then lexicographic.
bool peel_before(const RootDatum& d, const Weight& a, const Weight& b);

MultiplicityTable decompose_into_simples(const RootDatum& d, const GradedCharacter& chi);
MultiplicityTable decompose_into_deltas(const RootDatum& d, const GradedCharacter& chi);
// Requires floor >= chi.floor(); entries are exact at grades >= floor.
MultiplicityTable decompose_into_nablas(const RootDatum& d, const GradedCharacter& chi, int floor);

// Sum of m * ch X(lambda, r); nabla terms truncated at floor.
GradedCharacter recombine(const RootDatum& d, Family f, const MultiplicityTable& t, std::optional<int> floor = {});

}  // namespace curalg
