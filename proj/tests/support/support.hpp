#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curalg/formats.hpp"
#include "curalg/graded_character.hpp"
#include "curalg/multiplicity.hpp"

namespace curalg::testing {

inline std::string golden_dir() { return CURALG_GOLDEN_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline GradedCharacter golden_character(const std::string& name) {
  return read_character(read_file(golden_dir() + "/" + name)).second;
}

inline MultiplicityTable golden_table(const std::string& name) {
  return read_table(read_file(golden_dir() + "/" + name)).second;
}

// Lines of facts.txt are "key words ... value"; lookup by the key prefix.
class Facts {
 public:
  Facts() {
    std::istringstream in(read_file(golden_dir() + "/facts.txt"));
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines_.push_back(line);
  }
  std::string get(const std::string& key) const {
    for (const auto& l : lines_)
      if (l.size() > key.size() && l.compare(0, key.size(), key) == 0 && l[key.size()] == ' ')
        return l.substr(key.size() + 1);
    throw std::out_of_range("no golden fact: " + key);
  }
  long integer(const std::string& key) const { return std::stol(get(key)); }
  bool flag(const std::string& key) const { return get(key) == "true"; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> lines_;
};

// Finite character with small random support, coefficients in [-3, 3].
inline GradedCharacter random_character(std::mt19937_64& rng, int rank, int terms = 5) {
  GradedCharacter c;
  std::uniform_int_distribution<int> coord(-3, 3), grade(-3, 3), coeff(-3, 3);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> w(static_cast<std::size_t>(rank));
    for (int& x : w) x = coord(rng);
    int k = coeff(rng);
    if (k != 0) c.add_term(Weight(w), grade(rng), k);
  }
  return c;
}

}  // namespace curalg::testing
