#include "curalg_cli/job.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "curalg/bgg.hpp"
#include "curalg/character_families.hpp"
#include "curalg/cones.hpp"
#include "curalg/formats.hpp"
#include "curalg/garland.hpp"
#include "curalg/homological.hpp"
#include "curalg/irreducible.hpp"
#include "curalg/multiplicity.hpp"
#include "curalg/presentation.hpp"
#include "curalg/tilting.hpp"

namespace curalg::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* yes(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const Weight& need_weight(const JobConfig& c, const std::optional<Weight>& w, const char* flag) {
  if (!w) throw UsageError(std::string("missing ") + flag);
  if (static_cast<int>(w->c.size()) != c.rank)
    throw UsageError(std::string(flag) + " " + to_string(*w) + " does not have " + std::to_string(c.rank) + " coordinates");
  return *w;
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

const Weight& need_dominant(const RootDatum& d, const JobConfig& c, const std::optional<Weight>& w, const char* flag) {
  const Weight& x = need_weight(c, w, flag);
  if (!d.is_dominant(x)) throw UsageError(std::string(flag) + " " + to_string(x) + " is not dominant");
  return x;
}

std::string cache_root(const JobConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("CURALG_CACHE_DIR")) return env;
  return {};
}

std::string key_part(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.c.size(); ++i) s += (i ? "_" : "") + std::to_string(w.c[i]);
  return s;
}

TruncatedModule target_module(const RootDatum& d, const JobConfig& c, const std::string& kind, const Weight& mu,
                              int s) {
  auto g = lie_algebra(c.lie_type, c.rank);
  if (kind == "delta") return *delta_module(d, mu, s);
  if (kind == "simple") return irreducible_module(g, mu, s);
  if (kind == "nabla") return nabla_slice(g, mu, s, need(c.floor, "--floor"));
  throw UsageError("unknown module kind " + kind + " (expected delta, simple or nabla)");
}

JobResult run_char(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  Family f = parse_family(c.kind);
  int floor = 0;
  if (f == Family::Nabla) floor = need(c.floor, "--floor");
  if (f == Family::GlobalWeyl) {
    int top = need(c.top, "--top");
    if (top < c.grade) throw WindowError("globalweyl window: --top must be >= " + std::to_string(c.grade));
    floor = 2 * c.grade - top;
  }
  std::string cache_path;
  if (std::string root = cache_root(c); !root.empty()) {
    cache_path = root + "/char-" + std::string(1, c.lie_type) + std::to_string(c.rank) + "-" + family_name(f) + "-" +
                 key_part(lambda) + "-" + std::to_string(c.grade) + "-" + std::to_string(floor) + ".txt";
    if (std::filesystem::exists(cache_path)) return {kPass, read_file(cache_path), {}};
  }
  GradedCharacter chi = family_character(d, f, lambda, c.grade, floor);
  CharacterHeader h{c.lie_type, c.rank, family_name(f), to_string(lambda) + " " + std::to_string(c.grade)};
  JobResult r{kPass, write_character(h, chi), {}};
  if (!cache_path.empty()) {
    std::filesystem::create_directories(std::filesystem::path(cache_path).parent_path());
    std::ofstream(cache_path, std::ios::binary) << r.output;
  }
  return r;
}

JobResult run_decompose(const JobConfig& c, const RootDatum& d) {
  if (c.input.empty()) throw UsageError("missing --input");
  auto [h, chi] = read_character(read_file(c.input));
  if (h.type != c.lie_type || h.rank != c.rank) throw UsageError("character file is for a different root system");
  MultiplicityTable t;
  if (c.kind == "simple") {
    t = decompose_into_simples(d, chi);
  } else if (c.kind == "delta") {
    t = decompose_into_deltas(d, chi);
  } else if (c.kind == "nabla") {
    int floor = c.floor ? *c.floor : chi.floor() ? *chi.floor() : chi.min_grade().value_or(0);
    t = decompose_into_nablas(d, chi, floor);
  } else {
    throw UsageError("unknown family " + c.kind + " (expected simple, delta or nabla)");
  }
  JobResult r{t.nonnegative() ? kPass : kFail, write_table(c.kind, t), {}};
  if (r.status != kPass) r.diagnostic = "table has negative multiplicities";
  return r;
}

JobResult run_hom(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  const Weight& mu = need_dominant(d, c, c.target_weight, "--target-weight");
  std::string kind = c.kind.empty() ? "delta" : c.kind;
  TruncatedModule target = target_module(d, c, kind, mu, c.target_grade);
  std::size_t by_relations = delta_hom_dim(lambda, c.grade, target);
  std::size_t by_maps = hom_space(*delta_module(d, lambda, c.grade), target).size();
  std::ostringstream os;
  os << "schema curalg-report v1\nreport hom\n";
  os << "source delta " << to_string(lambda) << " " << c.grade << "\n";
  os << "target " << kind << " " << to_string(mu) << " " << c.target_grade << "\n";
  os << "dim_by_relations " << by_relations << "\n";
  os << "dim_by_maps " << by_maps << "\n";
  os << "verdict " << yes(by_relations == by_maps) << "\n";
  return {by_relations == by_maps ? kPass : kFail, os.str(), {}};
}

JobResult run_ext1(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  const Weight& mu = need_dominant(d, c, c.target_weight, "--target-weight");
  std::string kind = c.kind.empty() ? "delta" : c.kind;
  TruncatedModule target = target_module(d, c, kind, mu, c.target_grade);
  ExtResult e = ext1_from_delta(lambda, c.grade, target);
  std::ostringstream os;
  os << "schema curalg-report v1\nreport ext1\n";
  os << "source delta " << to_string(lambda) << " " << c.grade << "\n";
  os << "target " << kind << " " << to_string(mu) << " " << c.target_grade << "\n";
  os << "cocycles " << e.cocycle_space_dim << "\n";
  os << "coboundaries " << e.coboundary_dim << "\n";
  os << "dimension " << e.dimension << "\n";
  os << "verdict true\n";
  return {kPass, os.str(), {}};
}

JobResult run_filtration(const JobConfig& c, const RootDatum& d) {
  if (c.components.empty()) throw UsageError("missing --component kind:[w]:r");
  std::optional<TruncatedModule> m;
  for (const auto& spec : c.components) {
    std::size_t a = spec.find(':'), b = spec.rfind(':');
    if (a == std::string::npos || a == b) throw UsageError("malformed component " + spec);
    std::optional<Weight> w = parse_weight(spec.substr(a + 1, b - a - 1));
    const Weight& mu = need_dominant(d, c, w, "component weight");
    TruncatedModule part = target_module(d, c, spec.substr(0, a), mu, std::stoi(spec.substr(b + 1)));
    m = m ? direct_sum(*m, part) : part;
  }
  FiltrationReport rep = canonical_filtration(d, *m);
  return {rep.inequality_holds ? kPass : kFail, write_filtration_report(rep), {}};
}

JobResult run_bgg(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  if (c.gamma.empty()) throw UsageError("missing --gamma");
  for (const auto& w : c.gamma) need_dominant(d, c, w, "--gamma entry");
  ConeSet gamma = ConeSet::closure(d, c.gamma);
  JobResult r;
  if (gamma.members().size() != c.gamma.size()) {
    r.diagnostic = "notice: gamma closed under dominance to [";
    for (std::size_t i = 0; i < gamma.members().size(); ++i)
      r.diagnostic += (i ? "," : "") + to_string(gamma.members()[i]);
    r.diagnostic += "]";
  }
  int floor = need(c.floor, "--floor");
  BggReport rep = bgg_check(d, lambda, c.grade, gamma, floor);
  r.output = write_bgg_report(rep);
  r.status = rep.passed ? kPass : kFail;
  return r;
}

std::optional<std::pair<Weight, int>> parse_skip(const JobConfig& c) {
  if (!c.skip) return std::nullopt;
  std::size_t b = c.skip->rfind(':');
  if (b == std::string::npos) throw UsageError("malformed --skip, expected [w]:p");
  return std::make_pair(parse_weight(c.skip->substr(0, b)), std::stoi(c.skip->substr(b + 1)));
}

JobResult run_build(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  TiltingOptions opt;
  opt.seed = c.seed;
  opt.skip = parse_skip(c);
  TiltingBuild b = build_tilting(d, lambda, need(c.floor, "--floor"), opt);
  std::string steps = write_tower_steps(b);
  bool ok = steps.find("verdict true") != std::string::npos;
  return {ok ? kPass : kFail, dump_module(b.window) + write_table("delta-ledger", b.ledger) + steps, {}};
}

JobResult run_verify(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  TruncatedModule window;
  if (!c.input.empty()) {
    bool found = false;
    for (const auto& doc : split_documents(read_file(c.input)))
      if (doc.rfind("schema curalg-module v1", 0) == 0) {
        window = parse_module_dump(doc);
        found = true;
        break;
      }
    if (!found) throw UsageError("no module dump in " + c.input);
  } else {
    TiltingOptions opt;
    opt.seed = c.seed;
    opt.skip = parse_skip(c);
    window = build_tilting(d, lambda, need(c.floor, "--floor"), opt).window;
  }
  TiltingReport rep = verify_tilting(window, d, lambda);
  return {rep.passed() ? kPass : kFail, write_tilting_report(rep), {}};
}

JobResult run_garland(const JobConfig& c, const RootDatum& d) {
  const Weight& lambda = need_dominant(d, c, c.weight, "--weight");
  if (c.root < 1 || c.root > c.rank) throw UsageError("--root must lie in 1.." + std::to_string(c.rank));
  if (c.power < 0) throw UsageError("--power must be >= 0");
  auto g = lie_algebra(c.lie_type, c.rank);
  int top = c.top ? *c.top : c.grade + c.power;
  TruncatedModule w = global_weyl_slice(g, lambda, c.grade, top);
  std::size_t hw = highest_weight_index(w, c.grade, lambda);
  bool in_module = check_garland(c.root - 1, c.power, w, SparseVector::unit(hw));
  bool in_algebra = garland_identity_in_algebra(*g, c.root - 1, c.power);
  std::ostringstream os;
  os << "schema curalg-report v1\nreport garland\n";
  os << "module globalweyl " << to_string(lambda) << " " << c.grade << " top " << top << "\n";
  os << "root " << c.root << " power " << c.power << "\n";
  os << "module_check " << yes(in_module) << "\n";
  os << "algebra_check " << yes(in_algebra) << "\n";
  os << "verdict " << yes(in_module && in_algebra) << "\n";
  return {in_module && in_algebra ? kPass : kFail, os.str(), {}};
}

}  // namespace

std::vector<std::string> split_documents(const std::string& text) {
  std::vector<std::string> docs;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("schema ", 0) == 0 || docs.empty()) docs.emplace_back();
    docs.back() += line + "\n";
  }
  return docs;
}

JobResult run(const JobConfig& config) {
  try {
    if (config.lie_type != 'A') throw UsageError("only type A is supported");
    if (config.rank < 1 || config.rank > 8) throw UsageError("rank must lie in 1..8");
    const RootDatum& d = lie_algebra(config.lie_type, config.rank)->root_data();
    const std::string& cmd = config.command;
    if (cmd == "char") return run_char(config, d);
    if (cmd == "decompose") return run_decompose(config, d);
    if (cmd == "hom") return run_hom(config, d);
    if (cmd == "ext1") return run_ext1(config, d);
    if (cmd == "canonical-filtration") return run_filtration(config, d);
    if (cmd == "bgg-check") return run_bgg(config, d);
    if (cmd == "build-tilting") return run_build(config, d);
    if (cmd == "verify-tilting") return run_verify(config, d);
    if (cmd == "garland") return run_garland(config, d);
    throw UsageError("unknown command " + cmd);
  } catch (const WindowError& e) {
    return {kUsage, {}, std::string("window error: ") + e.what()};
  } catch (const WindowMismatch& e) {
    return {kUsage, {}, std::string("window error: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {kUsage, {}, std::string("precondition error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kUsage, {}, std::string("usage error: ") + e.what()};
  } catch (const std::out_of_range& e) {
    return {kUsage, {}, std::string("usage error: ") + e.what()};
  }
}

}  // namespace curalg::cli
