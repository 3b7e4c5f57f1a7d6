#include "p4kit/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "p4kit/errors.hpp"

namespace p4kit {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, int line)
      : ring_(ring), text_(text), line_(line) {}

  Polynomial parse() {
    Polynomial f = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return v;
  }
  Polynomial add(const Polynomial& a, const Polynomial& b, std::size_t at) {
    try {
      return a + b;
    } catch (const DegreeError&) {
      pos_ = at;
      fail("inhomogeneous sum");
    }
  }
  Polynomial sum() {
    std::size_t at = pos_;
    bool negate = accept('-');
    if (!negate) accept('+');
    Polynomial f = product();
    if (negate) f = -f;
    while (true) {
      skip_space();
      at = pos_;
      if (accept('+')) {
        f = add(f, product(), at);
      } else if (accept('-')) {
        f = add(f, -product(), at);
      } else {
        return f;
      }
    }
  }
  Polynomial product() {
    Polynomial f = power();
    while (accept('*')) f = f * power();
    return f;
  }
  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      std::int64_t e = integer();
      if (e > Monomial::kMaxDegree) fail("exponent too large");
      Polynomial r = Polynomial::constant(ring_, 1);
      for (std::int64_t k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }
  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = sum();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(ring_, integer() % ring_->field.characteristic());
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      std::int64_t idx = integer();
      if (idx >= ring_->nvars) {
        pos_ = at;
        fail("variable index out of range");
      }
      return Polynomial::variable(ring_, static_cast<int>(idx));
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  return line;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line) {
  return Parser(ring, text, line).parse();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PrimeField& field = f.field();
  const int n = f.ring()->nvars;
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = field.to_signed(t.coeff);
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.mono.degree() == 0) {
      os << c;
      need_star = true;
    }
    for (int v = 0; v < n; ++v) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      if (need_star) os << '*';
      os << 'x' << v;
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::vector<Polynomial> parse_ideal(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> gens;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto body = strip_comment(lines[i]);
    if (blank(body)) continue;
    gens.push_back(parse_polynomial(ring, body, static_cast<int>(i) + 1));
  }
  if (gens.empty()) throw ParseError("ideal file has no generators", 1, 1);
  return gens;
}

std::string format_ideal(const std::vector<Polynomial>& gens) {
  std::string out;
  for (const auto& g : gens) out += to_string(g) + "\n";
  return out;
}

GradedMatrix parse_matrix(const RingPtr& ring, std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(strip_comment(lines[i]))) ++i;
  if (i == lines.size()) throw ParseError("missing matrix header", 1, 1);
  GradedFreeModule target, source;
  {
    std::istringstream hs{std::string(strip_comment(lines[i]))};
    std::string word;
    hs >> word;
    if (word != "rows") throw ParseError("header must start with 'rows'", int(i) + 1, 1);
    std::vector<int>* into = &target.twists;
    while (hs >> word) {
      if (word == "cols") {
        if (into == &source.twists) throw ParseError("duplicate 'cols'", int(i) + 1, 1);
        into = &source.twists;
        continue;
      }
      try {
        std::size_t used = 0;
        int v = std::stoi(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
        into->push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad twist '" + word + "'", int(i) + 1,
                         1);
      }
    }
    if (into != &source.twists) throw ParseError("header lacks 'cols'", int(i) + 1, 1);
  }
  std::vector<Polynomial> entries;
  std::size_t rows_read = 0;
  for (++i; i < lines.size(); ++i) {
    auto body = strip_comment(lines[i]);
    if (blank(body)) continue;
    std::size_t start = 0;
    std::size_t count = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      auto piece = body.substr(start, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - start);
      try {
        entries.push_back(parse_polynomial(ring, piece, static_cast<int>(i) + 1));
      } catch (const ParseError& e) {
        throw ParseError(std::string("matrix entry: ") + e.what(), int(i) + 1,
                         static_cast<int>(start) + e.column());
      }
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (count != source.rank())
      throw ParseError("row has " + std::to_string(count) + " entries, expected " +
                           std::to_string(source.rank()),
                       int(i) + 1, 1);
    ++rows_read;
  }
  if (rows_read != target.rank())
    throw ParseError("expected " + std::to_string(target.rank()) + " rows, got " +
                         std::to_string(rows_read),
                     static_cast<int>(lines.size()), 1);
  return GradedMatrix::from_entries(ring, target, source, std::move(entries));
}

std::string format_matrix(const GradedMatrix& m) {
  std::ostringstream os;
  os << "rows";
  for (int t : m.target().twists) os << ' ' << t;
  os << " cols";
  for (int t : m.source().twists) os << ' ' << t;
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

}  // namespace p4kit
