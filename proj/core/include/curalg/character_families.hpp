#pragma once

#include <memory>

#include "curalg/graded_character.hpp"
#include "curalg/lie_algebra.hpp"
#include "curalg/truncated_module.hpp"

namespace curalg {

enum class Family { Simple, Delta, Nabla, GlobalWeyl };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Shared sl_{n+1} instance per (type, rank).
std::shared_ptr<const LieAlgebra> lie_algebra(char type, int rank);

GradedCharacter simple_graded_character(const RootDatum& d, const Weight& lambda, int r);
GradedCharacter delta_character(const RootDatum& d, const Weight& lambda, int r);
// W(lambda, r) on grades r .. r + (r - floor); bounded below, exact up to its ceiling.
GradedCharacter global_weyl_character(const RootDatum& d, const Weight& lambda, int r, int floor);
// nabla(lambda, r) exact at grades >= floor.
GradedCharacter nabla_character(const RootDatum& d, const Weight& lambda, int r, int floor);
GradedCharacter family_character(const RootDatum& d, Family f, const Weight& lambda, int r, int floor);

// Cached local Weyl module.
std::shared_ptr<const TruncatedModule> delta_module(const RootDatum& d, const Weight& lambda, int r);
// Grade spread of Delta(lambda): top grade minus bottom grade.
int delta_spread(const RootDatum& d, const Weight& lambda);

void clear_character_cache();
std::size_t character_cache_size();

}  // namespace curalg
