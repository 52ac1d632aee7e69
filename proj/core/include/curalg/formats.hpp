#pragma once

#include <optional>
#include <string>

#include "curalg/bgg.hpp"
#include "curalg/cones.hpp"
#include "curalg/graded_character.hpp"
#include "curalg/multiplicity.hpp"
#include "curalg/tilting.hpp"

namespace curalg {

struct CharacterHeader {
  char type = 'A';
  int rank = 1;
  std::string kind;   // simple, delta, nabla, globalweyl, module, ...
  std::string label;  // free text without newlines, e.g. "[2] 0"
};

// schema curalg-character v1; rows [[w],grade,coeff] in grade-descending,
// weight-ascending order.
std::string write_character(const CharacterHeader& h, const GradedCharacter& chi);
std::pair<CharacterHeader, GradedCharacter> read_character(const std::string& text);

// schema curalg-table v1; rows [[lambda],r,multiplicity] sorted by (lambda, r).
std::string write_table(const std::string& family, const MultiplicityTable& t);
std::pair<std::string, MultiplicityTable> read_table(const std::string& text);

std::string write_bgg_report(const BggReport& r);
std::string write_filtration_report(const FiltrationReport& r);
std::string write_tilting_report(const TiltingReport& r);
std::string write_tower_steps(const TiltingBuild& b);

}  // namespace curalg
