#include "pgtk/pgsolver.hh"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pgtk {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

struct RawVertex {
  long id;
  int priority;
  int owner;
  std::vector<long> succ;
  std::string name;
};

class LineParser {
 public:
  LineParser(const std::string& s, int line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }

  long number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail(line_, "expected a number");
    return std::stol(s_.substr(start, pos_ - start));
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '"') fail(line_, "expected a quoted name");
    size_t end = s_.find('"', pos_ + 1);
    if (end == std::string::npos) fail(line_, "unterminated name");
    std::string out = s_.substr(pos_ + 1, end - pos_ - 1);
    pos_ = end + 1;
    return out;
  }

  int line() const { return line_; }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_;
};

}  // namespace

ParityGame parse_pgsolver(const std::string& text) {
  std::vector<RawVertex> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser p(line, lineno);
    if (p.done()) continue;
    if (first_content) {
      first_content = false;
      size_t at = line.find_first_not_of(" \t");
      if (line.compare(at, 6, "parity") == 0) {
        std::string rest = line.substr(at + 6);
        LineParser hp(rest, lineno);
        hp.number();
        if (!hp.consume(';')) fail(lineno, "expected ';' after header");
        if (!hp.done()) fail(lineno, "trailing text after header");
        continue;
      }
    }
    RawVertex rv;
    rv.id = p.number();
    rv.priority = static_cast<int>(p.number());
    long owner = p.number();
    if (owner != 0 && owner != 1) fail(lineno, "owner must be 0 or 1");
    rv.owner = static_cast<int>(owner);
    if (p.peek() != ';' && p.peek() != '\0') {
      rv.succ.push_back(p.number());
      while (p.consume(',')) rv.succ.push_back(p.number());
      if (p.peek() == '"') rv.name = p.quoted();
    }
    if (!p.consume(';')) fail(lineno, "expected ';'");
    if (!p.done()) fail(lineno, "trailing text after ';'");
    raw.push_back(std::move(rv));
  }

  std::map<long, int> dense;
  std::vector<long> ids;
  for (const auto& rv : raw) ids.push_back(rv.id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    fail(lineno, "duplicate vertex id");
  for (size_t i = 0; i < ids.size(); ++i) dense[ids[i]] = static_cast<int>(i);

  ParityGame g;
  g.verts.resize(raw.size());
  for (const auto& rv : raw) {
    ParityGame::VertexData vd;
    vd.owner = rv.owner == 0 ? Owner::Even : Owner::Odd;
    vd.priority = rv.priority;
    vd.name = rv.name;
    for (long u : rv.succ) {
      auto it = dense.find(u);
      if (it == dense.end())
        throw std::runtime_error("unknown successor id " + std::to_string(u) +
                                 " of vertex " + std::to_string(rv.id));
      vd.succ.push_back(it->second);
    }
    g.verts[dense[rv.id]] = std::move(vd);
  }
  return g;
}

std::string write_pgsolver(const ParityGame& g) {
  std::string out = "parity " + std::to_string(g.size() ? g.size() - 1 : 0) + ";\n";
  for (int v = 0; v < g.size(); ++v) {
    out += std::to_string(v) + ' ' + std::to_string(g.priority(v)) + ' ' +
           (g.owner(v) == Owner::Even ? '0' : '1');
    for (size_t i = 0; i < g.succ(v).size(); ++i)
      out += (i == 0 ? " " : ",") + std::to_string(g.succ(v)[i]);
    if (!g.verts[v].name.empty()) out += " \"" + g.verts[v].name + '"';
    out += ";\n";
  }
  return out;
}

}  // namespace pgtk
