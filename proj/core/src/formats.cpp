#include "curalg/formats.hpp"

#include <sstream>
#include <stdexcept>

namespace curalg {

namespace {

std::string opt(std::optional<int> v) { return v ? std::to_string(*v) : std::string("none"); }

std::optional<int> parse_opt(const std::string& s) {
  if (s == "none") return std::nullopt;
  return std::stoi(s);
}

std::string row(const Weight& w, int grade, std::int64_t c) {
  return "[" + to_string(w) + "," + std::to_string(grade) + "," + std::to_string(c) + "]";
}

// "[[w],g,c]"
void parse_row(const std::string& line, Weight& w, int& grade, std::int64_t& c) {
  std::size_t close = line.find(']');
  if (line.size() < 8 || line.compare(0, 2, "[[") != 0 || close == std::string::npos || line.back() != ']')
    throw std::invalid_argument("malformed row: " + line);
  w = parse_weight(line.substr(1, close));
  std::string rest = line.substr(close + 2, line.size() - close - 3);
  std::size_t comma = rest.find(',');
  if (line[close + 1] != ',' || comma == std::string::npos) throw std::invalid_argument("malformed row: " + line);
  grade = std::stoi(rest.substr(0, comma));
  c = std::stoll(rest.substr(comma + 1));
}

class Reader {
 public:
  explicit Reader(const std::string& text) : is_(text) {}
  std::string field(const std::string& key) {
    std::string line;
    if (!std::getline(is_, line)) throw std::invalid_argument("missing field " + key);
    if (line.compare(0, key.size() + 1, key + " ") != 0 && line != key)
      throw std::invalid_argument("expected field " + key + ", found: " + line);
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
  }
  std::string line() {
    std::string l;
    if (!std::getline(is_, l)) throw std::invalid_argument("unexpected end of input");
    return l;
  }

 private:
  std::istringstream is_;
};

const char* yes(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string write_character(const CharacterHeader& h, const GradedCharacter& chi) {
  std::ostringstream os;
  os << "schema curalg-character v1\n";
  os << "type " << h.type << "\n";
  os << "rank " << h.rank << "\n";
  os << "kind " << h.kind << "\n";
  os << "label " << h.label << "\n";
  os << "floor " << opt(chi.floor()) << "\n";
  os << "ceiling " << opt(chi.ceiling()) << "\n";
  os << "top_grade " << opt(chi.top_grade()) << "\n";
  os << "entries " << chi.entries().size() << "\n";
  for (const auto& [k, v] : chi.entries()) os << row(k.weight, k.grade, v) << "\n";
  return os.str();
}

std::pair<CharacterHeader, GradedCharacter> read_character(const std::string& text) {
  Reader r(text);
  if (r.field("schema") != "curalg-character v1") throw std::invalid_argument("unsupported character schema");
  CharacterHeader h;
  std::string type = r.field("type");
  if (type.size() != 1) throw std::invalid_argument("bad type field");
  h.type = type[0];
  h.rank = std::stoi(r.field("rank"));
  h.kind = r.field("kind");
  h.label = r.field("label");
  auto floor = parse_opt(r.field("floor"));
  auto ceiling = parse_opt(r.field("ceiling"));
  r.field("top_grade");
  std::size_t n = std::stoul(r.field("entries"));
  GradedCharacter chi;
  for (std::size_t i = 0; i < n; ++i) {
    Weight w;
    int g;
    std::int64_t c;
    parse_row(r.line(), w, g, c);
    if (static_cast<int>(w.c.size()) != h.rank) throw std::invalid_argument("row weight has the wrong rank");
    chi.add_term(w, g, c);
  }
  if (floor) chi.set_floor(*floor);
  if (ceiling) chi.set_ceiling(*ceiling);
  return {h, chi};
}

std::string write_table(const std::string& family, const MultiplicityTable& t) {
  std::ostringstream os;
  os << "schema curalg-table v1\n";
  os << "family " << family << "\n";
  os << "valid_floor " << opt(t.valid_floor) << "\n";
  os << "rows " << t.entries.size() << "\n";
  for (const auto& [key, m] : t.entries) os << row(key.first, key.second, m) << "\n";
  return os.str();
}

std::pair<std::string, MultiplicityTable> read_table(const std::string& text) {
  Reader r(text);
  if (r.field("schema") != "curalg-table v1") throw std::invalid_argument("unsupported table schema");
  std::string family = r.field("family");
  MultiplicityTable t;
  t.valid_floor = parse_opt(r.field("valid_floor"));
  std::size_t n = std::stoul(r.field("rows"));
  for (std::size_t i = 0; i < n; ++i) {
    Weight w;
    int g;
    std::int64_t c;
    parse_row(r.line(), w, g, c);
    t.add(w, g, c);
  }
  return {family, t};
}

std::string write_bgg_report(const BggReport& r) {
  std::ostringstream os;
  os << "schema curalg-report v1\n";
  os << "report bgg-check\n";
  os << "lambda " << to_string(r.lambda) << " r " << r.r << " floor " << r.floor << "\n";
  for (const auto& e : r.entries)
    os << "entry " << to_string(e.mu) << " " << e.s << " nabla " << e.nabla_multiplicity << " jordan_holder "
       << e.jordan_holder << " hom " << e.hom_dim << " agree " << yes(e.agree()) << "\n";
  os << "verdict " << yes(r.passed) << "\n";
  return os.str();
}

std::string write_filtration_report(const FiltrationReport& r) {
  std::ostringstream os;
  os << "schema curalg-report v1\n";
  os << "report canonical-filtration\n";
  for (std::size_t s = 0; s < r.chain.size(); ++s) {
    const auto& st = r.chain[s];
    os << "step " << s << " lambda " << to_string(st.lambda) << " dim " << st.dim << " quotient_dim "
       << st.quotient.total_dim() << " previous_misses_lambda " << yes(st.previous_misses_lambda) << "\n";
  }
  for (const auto& [key, m] : r.hom_dims.entries)
    os << "hom " << to_string(key.first) << " " << key.second << " " << m << "\n";
  os << "compare_floor " << r.compare_floor << "\n";
  os << "inequality " << yes(r.inequality_holds) << "\n";
  os << "equality " << yes(r.equality) << "\n";
  for (const auto& v : r.violations) os << "violation " << v << "\n";
  os << "verdict " << yes(r.inequality_holds) << "\n";
  return os.str();
}

std::string write_tilting_report(const TiltingReport& r) {
  std::ostringstream os;
  os << "schema curalg-report v1\n";
  os << "report verify-tilting\n";
  for (const auto& c : r.checks) {
    os << "check " << c.name << " " << yes(c.passed) << "\n";
    for (const auto& f : c.failures) os << "failure " << c.name << " " << f << "\n";
  }
  os << "verdict " << yes(r.passed()) << "\n";
  return os.str();
}

std::string write_tower_steps(const TiltingBuild& b) {
  std::ostringstream os;
  os << "schema curalg-report v1\n";
  os << "report build-tilting\n";
  os << "lambda " << to_string(b.lambda) << " floor " << b.floor << "\n";
  for (std::size_t s = 0; s < b.offsets.lambdas.size(); ++s)
    os << "offset " << to_string(b.offsets.lambdas[s]) << " " << b.offsets.offsets[s] << " spread "
       << b.offsets.spreads[s] << "\n";
  bool ok = true;
  for (const auto& st : b.steps) {
    os << "step " << st.eta << " label " << to_string(st.mu) << " " << st.p << " ext " << st.ext_dim << " dim "
       << st.dim_before << " " << st.dim_after << " non_split " << yes(st.non_split) << " summand_certified "
       << yes(st.summand_certified) << " splits " << st.fitting_splits << "\n";
    ok = ok && st.non_split && st.summand_certified;
  }
  os << "verdict " << yes(ok) << "\n";
  return os.str();
}

}  // namespace curalg
