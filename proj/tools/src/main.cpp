#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "curalg_cli/job.hpp"

namespace {

struct RawOptions {
  std::string type = "A";
  std::string weight, target_weight, gamma, skip, output;
  std::optional<int> floor, top;
};

}  // namespace

int main(int argc, char** argv) {
  using curalg::cli::JobConfig;
  CLI::App app{"curalg: graded modules over current algebras"};
  app.require_subcommand(1);
  JobConfig cfg;
  RawOptions raw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", raw.type, "Lie type (A)");
    sub->add_option("--rank", cfg.rank, "rank")->required();
    sub->add_option("--output,-o", raw.output, "output file (default stdout)");
  };
  auto label = [&](CLI::App* sub) {
    sub->add_option("--weight", raw.weight, "weight in fundamental coordinates, e.g. [2,0]")->required();
    sub->add_option("--grade", cfg.grade, "grade r");
  };
  auto target = [&](CLI::App* sub) {
    sub->add_option("--target-kind", cfg.kind, "delta, simple or nabla");
    sub->add_option("--target-weight", raw.target_weight, "target weight")->required();
    sub->add_option("--target-grade", cfg.target_grade, "target grade");
    sub->add_option("--floor", raw.floor, "floor for nabla targets");
  };

  auto* ch = app.add_subcommand("char", "graded character of a family member");
  common(ch);
  label(ch);
  ch->add_option("--kind", cfg.kind, "simple, delta, nabla or globalweyl")->required();
  ch->add_option("--floor", raw.floor, "lowest exact grade (nabla)");
  ch->add_option("--top", raw.top, "highest exact grade (globalweyl)");
  ch->add_option("--cache-dir", cfg.cache_dir, "character cache directory");

  auto* dec = app.add_subcommand("decompose", "multiplicities of a character file");
  common(dec);
  dec->add_option("--family", cfg.kind, "simple, delta or nabla")->required();
  dec->add_option("--input", cfg.input, "character file")->required();
  dec->add_option("--floor", raw.floor, "validity floor for the nabla family");

  auto* hom = app.add_subcommand("hom", "dim Hom(Delta(weight, grade), target)");
  common(hom);
  label(hom);
  target(hom);

  auto* ext = app.add_subcommand("ext1", "dim Ext1(Delta(weight, grade), target)");
  common(ext);
  label(ext);
  target(ext);

  auto* cf = app.add_subcommand("canonical-filtration", "canonical filtration of a direct sum");
  common(cf);
  cf->add_option("--component", cfg.components, "summand kind:[w]:r, kind in delta, simple, nabla")->required();
  cf->add_option("--floor", raw.floor, "floor for nabla summands");

  auto* bgg = app.add_subcommand("bgg-check", "BGG reciprocity on an injective slice");
  common(bgg);
  label(bgg);
  bgg->add_option("--gamma", raw.gamma, "cone weights, e.g. [[0],[2]]")->required();
  bgg->add_option("--floor", raw.floor, "window floor")->required();

  auto* bt = app.add_subcommand("build-tilting", "build a window of T(weight, 0)");
  common(bt);
  label(bt);
  bt->add_option("--floor", raw.floor, "window floor")->required();
  bt->add_option("--seed", cfg.seed, "endomorphism sampling seed");
  bt->add_option("--skip", raw.skip, "leave out the extension at [w]:p");

  auto* vt = app.add_subcommand("verify-tilting", "check a tilting window");
  common(vt);
  label(vt);
  vt->add_option("--input", cfg.input, "bundle written by build-tilting");
  vt->add_option("--floor", raw.floor, "window floor when building in place");
  vt->add_option("--seed", cfg.seed, "endomorphism sampling seed");
  vt->add_option("--skip", raw.skip, "leave out the extension at [w]:p");

  auto* gar = app.add_subcommand("garland", "Garland identity on a global Weyl slice");
  common(gar);
  label(gar);
  gar->add_option("--root", cfg.root, "simple root index (1-based)");
  gar->add_option("--power", cfg.power, "exponent s");
  gar->add_option("--top", raw.top, "top grade of the slice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : curalg::cli::kUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (raw.type.size() != 1) throw std::invalid_argument("--type must be a single letter");
    cfg.lie_type = raw.type[0];
    if (!raw.weight.empty()) cfg.weight = curalg::parse_weight(raw.weight);
    if (!raw.target_weight.empty()) cfg.target_weight = curalg::parse_weight(raw.target_weight);
    if (!raw.gamma.empty()) cfg.gamma = curalg::parse_weight_list(raw.gamma);
    if (!raw.skip.empty()) cfg.skip = raw.skip;
    cfg.floor = raw.floor;
    cfg.top = raw.top;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return curalg::cli::kUsage;
  }

  curalg::cli::JobResult res = curalg::cli::run(cfg);
  if (!res.diagnostic.empty()) std::cerr << res.diagnostic << "\n";
  if (raw.output.empty()) {
    std::cout << res.output;
  } else if (!res.output.empty()) {
    std::ofstream out(raw.output, std::ios::binary);
    if (!out) {
      std::cerr << "usage error: cannot write " << raw.output << "\n";
      return curalg::cli::kUsage;
    }
    out << res.output;
  }
  return res.status;
}
