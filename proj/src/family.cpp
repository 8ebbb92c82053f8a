#include "quipu/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quipu {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

void check_quipu_params(bool closed, long r, const std::vector<int>& positions,
                        const std::vector<int>& lengths) {
  const char* name = closed ? "closed quipu" : "open quipu";
  if (closed && r < 3)
    bad(std::string(name) + ": cycle length must be >= 3, got " + std::to_string(r));
  if (!closed && r < 1)
    bad(std::string(name) + ": spine must have >= 1 vertex, got " + std::to_string(r));
  if (positions.size() != lengths.size())
    bad(std::string(name) + ": " + std::to_string(positions.size()) +
        " positions vs " + std::to_string(lengths.size()) + " lengths");
  long lo = closed ? 0 : 1;
  long hi = closed ? r - 1 : r - 2;
  int prev = -1;
  for (int m : positions) {
    if (m < lo || m > hi)
      bad(std::string(name) + ": branch position " + std::to_string(m) +
          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (m <= prev)
      bad(std::string(name) + ": branch positions must be strictly increasing");
    prev = m;
  }
  for (int len : lengths)
    if (len < 1)
      bad(std::string(name) + ": branch length must be >= 1, got " + std::to_string(len));
}

}  // namespace

FamilySpec FamilySpec::path(long n) {
  FamilySpec s;
  s.kind = Kind::Path;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::cycle(long n) {
  FamilySpec s;
  s.kind = Kind::Cycle;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::open_quipu(long spine, std::vector<int> positions,
                                  std::vector<int> lengths) {
  FamilySpec s;
  s.kind = Kind::OpenQuipu;
  s.spine = spine;
  s.positions = std::move(positions);
  s.lengths = std::move(lengths);
  return s;
}

FamilySpec FamilySpec::closed_quipu(long girth, std::vector<int> positions,
                                    std::vector<int> lengths) {
  FamilySpec s;
  s.kind = Kind::ClosedQuipu;
  s.girth = girth;
  s.positions = std::move(positions);
  s.lengths = std::move(lengths);
  return s;
}

FamilySpec FamilySpec::dagger(long m) {
  FamilySpec s;
  s.kind = Kind::Dagger;
  s.n = m;
  return s;
}

FamilySpec FamilySpec::h_shape(long n) {
  FamilySpec s;
  s.kind = Kind::HShape;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::t_shape(long n) {
  FamilySpec s;
  s.kind = Kind::TShape;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::lollipop(long pendant, long girth) {
  FamilySpec s;
  s.kind = Kind::Lollipop;
  s.n = pendant;
  s.girth = girth;
  return s;
}

FamilySpec FamilySpec::star(long k) {
  FamilySpec s;
  s.kind = Kind::Star;
  s.n = k;
  return s;
}

FamilySpec FamilySpec::union_of(std::vector<FamilySpec> parts) {
  FamilySpec s;
  s.kind = Kind::Union;
  s.parts = std::move(parts);
  return s;
}

long FamilySpec::order() const {
  switch (kind) {
    case Kind::Path:
    case Kind::Cycle:
    case Kind::HShape:
    case Kind::TShape:
      return n;
    case Kind::Dagger:
      return n + 4;
    case Kind::Star:
      return n + 1;
    case Kind::Lollipop:
      return girth + n;
    case Kind::OpenQuipu: {
      long total = spine;
      for (int len : lengths) total += len;
      return total;
    }
    case Kind::ClosedQuipu: {
      long total = girth;
      for (int len : lengths) total += len;
      return total;
    }
    case Kind::Union: {
      long total = 0;
      for (const auto& p : parts) total += p.order();
      return total;
    }
  }
  return 0;
}

namespace {

Graph build_quipu(bool closed, long r, const std::vector<int>& positions,
                  const std::vector<int>& lengths) {
  check_quipu_params(closed, r, positions, lengths);
  long total = r;
  for (int len : lengths) total += len;
  Graph g(static_cast<int>(total));
  for (int v = 0; v + 1 < r; ++v) g.add_edge(v, v + 1);
  if (closed) g.add_edge(static_cast<int>(r) - 1, 0);
  int next = static_cast<int>(r);
  for (size_t i = 0; i < positions.size(); ++i) {
    int attach = positions[i];
    for (int step = 0; step < lengths[i]; ++step) {
      g.add_edge(attach, next);
      attach = next++;
    }
  }
  return g;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Path: {
      if (spec.n < 0) bad("path: order must be >= 0, got " + std::to_string(spec.n));
      if (spec.n > Graph::kMaxVertices)
        bad("path: order must be <= 64, got " + std::to_string(spec.n));
      Graph g(static_cast<int>(spec.n));
      for (int v = 0; v + 1 < spec.n; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case FamilySpec::Kind::Cycle: {
      if (spec.n < 3) bad("cycle: order must be >= 3, got " + std::to_string(spec.n));
      return build_quipu(true, spec.n, {}, {});
    }
    case FamilySpec::Kind::OpenQuipu:
      return build_quipu(false, spec.spine, spec.positions, spec.lengths);
    case FamilySpec::Kind::ClosedQuipu:
      return build_quipu(true, spec.girth, spec.positions, spec.lengths);
    case FamilySpec::Kind::Dagger: {
      if (spec.n < 1) bad("dagger: pendant path length must be >= 1, got " +
                          std::to_string(spec.n));
      Graph g(static_cast<int>(spec.n) + 4);
      g.add_edge(0, 1);
      g.add_edge(0, 2);
      g.add_edge(0, 3);
      int attach = 0;
      for (int next = 4; next < g.order(); ++next) {
        g.add_edge(attach, next);
        attach = next;
      }
      return g;
    }
    case FamilySpec::Kind::HShape: {
      if (spec.n < 10) bad("H-shape: order must be >= 10, got " + std::to_string(spec.n));
      return build_quipu(false, spec.n - 4,
                         {2, static_cast<int>(spec.n) - 7}, {2, 2});
    }
    case FamilySpec::Kind::TShape: {
      if (spec.n < 6) bad("T-shape: order must be >= 6, got " + std::to_string(spec.n));
      return build_quipu(false, spec.n - 2, {2}, {2});
    }
    case FamilySpec::Kind::Lollipop: {
      if (spec.n < 1) bad("lollipop: pendant path length must be >= 1, got " +
                          std::to_string(spec.n));
      return build_quipu(true, spec.girth, {0}, {static_cast<int>(spec.n)});
    }
    case FamilySpec::Kind::Star: {
      if (spec.n < 1) bad("star: leaf count must be >= 1, got " + std::to_string(spec.n));
      Graph g(static_cast<int>(spec.n) + 1);
      for (int v = 1; v <= spec.n; ++v) g.add_edge(0, v);
      return g;
    }
    case FamilySpec::Kind::Union: {
      Graph g;
      for (const auto& part : spec.parts)
        g = Graph::disjoint_union(g, build_family(part));
      return g;
    }
  }
  bad("unknown family kind");
}

namespace {

void render_branches(std::ostringstream& os, const FamilySpec& s) {
  for (size_t i = 0; i < s.positions.size(); ++i) {
    if (i) os << ",";
    os << s.positions[i] << ":" << s.lengths[i];
  }
}

}  // namespace

std::string render_spec(const FamilySpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case FamilySpec::Kind::Path: os << "P:" << spec.n; break;
    case FamilySpec::Kind::Cycle: os << "C:" << spec.n; break;
    case FamilySpec::Kind::HShape: os << "H:" << spec.n; break;
    case FamilySpec::Kind::TShape: os << "T:" << spec.n; break;
    case FamilySpec::Kind::Dagger: os << "D:" << spec.n; break;
    case FamilySpec::Kind::Star: os << "K1:" << spec.n; break;
    case FamilySpec::Kind::Lollipop:
      os << "LL[g=" << spec.girth << ";" << spec.n << "]";
      break;
    case FamilySpec::Kind::OpenQuipu:
      os << "OQ[r=" << spec.spine << ";";
      render_branches(os, spec);
      os << "]";
      break;
    case FamilySpec::Kind::ClosedQuipu:
      os << "CQ[g=" << spec.girth << ";";
      render_branches(os, spec);
      os << "]";
      break;
    case FamilySpec::Kind::Union: {
      os << "U(";
      for (size_t i = 0; i < spec.parts.size(); ++i) {
        if (i) os << ",";
        os << render_spec(spec.parts[i]);
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec s = parse_spec_inner();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after specification");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecParseError(msg, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_word(const char* w) {
    skip_space();
    size_t len = std::string(w).size();
    if (text_.compare(pos_, len, w) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  long parse_number() {
    skip_space();
    size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1))
      fail("expected a number");
    return std::stol(text_.substr(start, pos_ - start));
  }

  void parse_branches(FamilySpec& s) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') return;  // no branches
    for (;;) {
      s.positions.push_back(static_cast<int>(parse_number()));
      expect(':');
      s.lengths.push_back(static_cast<int>(parse_number()));
      if (!eat(',')) break;
    }
  }

  FamilySpec parse_spec_inner() {
    skip_space();
    if (eat_word("OQ")) {
      expect('[');
      if (!eat_word("r")) fail("expected 'r='");
      expect('=');
      FamilySpec s = FamilySpec::open_quipu(parse_number(), {}, {});
      if (eat(';')) parse_branches(s);
      expect(']');
      return s;
    }
    if (eat_word("CQ")) {
      expect('[');
      if (!eat_word("g")) fail("expected 'g='");
      expect('=');
      FamilySpec s = FamilySpec::closed_quipu(parse_number(), {}, {});
      if (eat(';')) parse_branches(s);
      expect(']');
      return s;
    }
    if (eat_word("LL")) {
      expect('[');
      if (!eat_word("g")) fail("expected 'g='");
      expect('=');
      long g = parse_number();
      expect(';');
      long n = parse_number();
      expect(']');
      return FamilySpec::lollipop(n, g);
    }
    if (eat_word("U")) {
      expect('(');
      std::vector<FamilySpec> parts;
      parts.push_back(parse_spec_inner());
      while (eat(',')) parts.push_back(parse_spec_inner());
      expect(')');
      return FamilySpec::union_of(std::move(parts));
    }
    if (eat_word("K1")) {
      expect(':');
      return FamilySpec::star(parse_number());
    }
    if (eat_word("P")) {
      expect(':');
      return FamilySpec::path(parse_number());
    }
    if (eat_word("C")) {
      expect(':');
      return FamilySpec::cycle(parse_number());
    }
    if (eat_word("H")) {
      expect(':');
      return FamilySpec::h_shape(parse_number());
    }
    if (eat_word("T")) {
      expect(':');
      return FamilySpec::t_shape(parse_number());
    }
    if (eat_word("D")) {
      expect(':');
      return FamilySpec::dagger(parse_number());
    }
    fail("expected a family tag (P, C, H, T, D, K1, LL, OQ, CQ, U)");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_spec(const std::string& text) { return Parser(text).parse(); }

}  // namespace quipu
