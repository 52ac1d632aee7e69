#include "curalg/weight.hpp"

#include <cctype>
#include <stdexcept>

namespace curalg {

bool Weight::is_zero() const {
  for (int x : c)
    if (x != 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.c.size() != c.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& x : r.c) x = -x;
  return r;
}

Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (int& x : r.c) x *= k;
  return r;
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.c[i]);
  }
  return s + "]";
}

namespace {

std::string strip_spaces(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return s;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("malformed weight: " + text);
  Weight w;
  std::size_t pos = 1;
  while (pos < s.size()) {
    std::size_t end = s.find_first_of(",]", pos);
    std::string tok = s.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("malformed weight: " + text);
    w.c.push_back(v);
    if (s[end] == ']') {
      if (end + 1 != s.size()) throw std::invalid_argument("malformed weight: " + text);
      break;
    }
    pos = end + 1;
  }
  return w;
}

std::vector<Weight> parse_weight_list(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("malformed weight list: " + text);
  std::vector<Weight> out;
  std::size_t pos = 1;
  while (pos + 1 < s.size()) {
    if (s[pos] != '[') throw std::invalid_argument("malformed weight list: " + text);
    std::size_t end = s.find(']', pos);
    if (end == std::string::npos) throw std::invalid_argument("malformed weight list: " + text);
    out.push_back(parse_weight(s.substr(pos, end - pos + 1)));
    pos = end + 1;
    if (pos < s.size() - 1) {
      if (s[pos] != ',') throw std::invalid_argument("malformed weight list: " + text);
      ++pos;
    }
  }
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : w.c) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace curalg
