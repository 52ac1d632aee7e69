#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curalg/weight.hpp"

namespace curalg::cli {

struct JobConfig {
  std::string command;  // char, decompose, hom, ext1, canonical-filtration, bgg-check,
                        // build-tilting, verify-tilting, garland
  char lie_type = 'A';
  int rank = 1;
  std::string kind;     // char kind, decompose family, or hom/ext1 target kind
  std::optional<Weight> weight;
  int grade = 0;
  std::optional<Weight> target_weight;
  int target_grade = 0;
  std::vector<Weight> gamma;
  std::optional<int> floor;
  std::optional<int> top;
  std::vector<std::string> components;  // kind:[w]:r
  std::string input;    // path
  std::string cache_dir;
  std::uint64_t seed = 0x5eedULL;
  int root = 1;         // garland: simple root index, 1-based
  int power = 1;        // garland: s
  std::optional<std::string> skip;  // build-tilting: "[w]:p" extension to leave out
};

enum ExitStatus { kPass = 0, kFail = 1, kUsage = 2 };

struct JobResult {
  int status = kPass;
  std::string output;
  std::string diagnostic;
};

JobResult run(const JobConfig& config);

// A bundle holds several documents, each starting with a "schema" line.
std::vector<std::string> split_documents(const std::string& text);

}  // namespace curalg::cli
