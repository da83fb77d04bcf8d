#include "borelgin/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

#include "borelgin/errors.hpp"

namespace borelgin {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Source {
 public:
  explicit Source(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  const std::string& text() const { return text_; }

 private:
  const std::string& text_;
};

class ExprParser {
 public:
  ExprParser(const Source& src, std::size_t begin, std::size_t end,
             const std::vector<std::string>& vars, const Ring& ring)
      : src_(src), text_(src.text()), pos_(begin), end_(end), vars_(vars), ring_(ring) {}

  std::size_t pos() {
    skip();
    return pos_;
  }
  bool at_end() { return pos() >= end_; }
  bool accept(char c) {
    if (pos() < end_ && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) { src_.fail(pos(), message); }

  Polynomial sum() {
    Polynomial acc = product();
    for (;;) {
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

 private:
  void skip() {
    while (pos_ < end_ && is_space(text_[pos_])) ++pos_;
  }

  Polynomial product() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (pos() < end_ && text_[pos_] == '/') {
        std::size_t at = pos_++;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) src_.fail(at, "division by a nonconstant or zero");
        acc = acc.scaled(d.leading_coefficient().inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    std::size_t at = pos();
    unsigned long e = integer("exponent");
    if (e > 65535) src_.fail(at, "exponent too large");
    Polynomial out = Polynomial::constant(ring_, ring_.field.one());
    for (;;) {
      if (e & 1u) out = out * base;
      e >>= 1u;
      if (e == 0) break;
      base = base * base;
    }
    return out;
  }

  unsigned long integer(const char* what) {
    std::size_t start = pos();
    while (pos_ < end_ && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) src_.fail(start, std::string("expected ") + what);
    std::string digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) src_.fail(start, std::string(what) + " too large");
    return std::stoul(digits);
  }

  Polynomial primary() {
    std::size_t start = pos();
    if (start >= end_) fail("unexpected end of expression");
    char c = text_[start];
    if (is_digit(c)) {
      while (pos_ < end_ && is_digit(text_[pos_])) ++pos_;
      return Polynomial::constant(ring_, ring_.field.from_decimal(text_.substr(start, pos_ - start)));
    }
    if (is_ident_start(c)) {
      while (pos_ < end_ && is_ident(text_[pos_])) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) src_.fail(start, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, static_cast<int>(it - vars_.begin()));
    }
    if (accept('(')) {
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    src_.fail(start, std::string("unexpected character '") + c + "'");
  }

  const Source& src_;
  const std::string& text_;
  std::size_t pos_;
  std::size_t end_;
  const std::vector<std::string>& vars_;
  const Ring& ring_;
};

struct Word {
  std::string text;
  std::size_t offset;
};

std::vector<Word> split_words(const std::string& text, std::size_t begin, std::size_t end) {
  std::vector<Word> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && is_space(text[i])) ++i;
    if (i >= end) break;
    std::size_t start = i;
    while (i < end && !is_space(text[i])) ++i;
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

unsigned long long to_unsigned(const Source& src, const Word& w) {
  if (w.text.empty() || !std::all_of(w.text.begin(), w.text.end(), is_digit) || w.text.size() > 19) {
    src.fail(w.offset, "expected a non-negative integer, got '" + w.text + "'");
  }
  return std::stoull(w.text);
}

std::vector<unsigned> unsigned_list(const Source& src, const Word& w) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = w.text.find(',', start);
    Word part{w.text.substr(start, comma == std::string::npos ? std::string::npos : comma - start),
              w.offset + start};
    unsigned long long v = to_unsigned(src, part);
    if (v > 100000) src.fail(part.offset, "value too large");
    out.push_back(static_cast<unsigned>(v));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::string trimmed(const std::string& text, std::size_t begin, std::size_t end) {
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return text.substr(begin, end - begin);
}

}  // namespace

IdealSource parse_ideal(const std::string& input, const std::optional<Field>& field_override) {
  std::string text = input;
  // Comments become blanks so offsets still map to the input.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '#') continue;
    while (i < text.size() && text[i] != '\n') text[i++] = ' ';
  }
  Source src(text);
  IdealSource out;
  if (field_override) out.field = *field_override;
  bool have_ring = false;
  bool have_ideal = false;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) {
      if (!trimmed(text, pos, text.size()).empty()) {
        std::size_t at = pos;
        while (is_space(text[at])) ++at;
        src.fail(at, "missing ';' after statement");
      }
      break;
    }
    std::size_t begin = pos;
    while (begin < semi && is_space(text[begin])) ++begin;
    pos = semi + 1;
    if (begin == semi) continue;
    std::size_t kw_end = begin;
    while (kw_end < semi && is_ident(text[kw_end])) ++kw_end;
    std::string keyword = text.substr(begin, kw_end - begin);
    if (keyword.empty()) src.fail(begin, "expected a keyword");
    std::vector<Word> words = split_words(text, kw_end, semi);

    if (keyword == "label") {
      out.label = trimmed(text, kw_end, semi);
    } else if (keyword == "ring") {
      if (have_ring) src.fail(begin, "ring declared twice");
      std::size_t i = kw_end;
      for (;;) {
        while (i < semi && is_space(text[i])) ++i;
        std::size_t start = i;
        if (i >= semi || !is_ident_start(text[i])) src.fail(i, "expected a variable name");
        while (i < semi && is_ident(text[i])) ++i;
        std::string name = text.substr(start, i - start);
        if (std::find(out.variables.begin(), out.variables.end(), name) != out.variables.end()) {
          src.fail(start, "variable '" + name + "' declared twice");
        }
        out.variables.push_back(name);
        while (i < semi && is_space(text[i])) ++i;
        if (i >= semi) break;
        if (text[i] != ',') src.fail(i, "expected ','");
        ++i;
      }
      if (out.variables.size() > 16) src.fail(begin, "at most 16 variables are supported");
      have_ring = true;
    } else if (keyword == "char") {
      if (have_ideal) src.fail(begin, "char must precede the ideal");
      if (words.size() != 1) src.fail(begin, "char takes one integer");
      unsigned long long p = to_unsigned(src, words[0]);
      if (!field_override) {
        if (p == 0) {
          out.field = Field::rationals();
        } else if (p >= (1ull << 31) || !is_prime_number(static_cast<std::uint32_t>(p))) {
          src.fail(words[0].offset, "characteristic must be 0 or a prime below 2^31");
        } else {
          out.field = Field::prime(static_cast<std::uint32_t>(p));
        }
      }
    } else if (keyword == "ideal") {
      if (!have_ring) src.fail(begin, "ideal before ring");
      have_ideal = true;
      Ring ring = out.ring();
      ExprParser ep(src, kw_end, semi, out.variables, ring);
      for (;;) {
        std::size_t start = ep.pos();
        Polynomial f = ep.sum();
        if (!f.is_homogeneous()) src.fail(start, "inhomogeneous generator");
        if (!f.is_zero()) out.generators.push_back(f);
        if (ep.at_end()) break;
        if (!ep.accept(',')) ep.fail("expected ',' or ';'");
      }
    } else if (keyword == "scheme") {
      if (!have_ring) src.fail(begin, "scheme before ring");
      if (words.size() < 2) src.fail(begin, "scheme needs a kind and arguments");
      SchemeDirective sd;
      sd.kind = words[0].text;
      if (sd.kind != "ci" && sd.kind != "points" && sd.kind != "hypersurface_points") {
        src.fail(words[0].offset, "unknown scheme kind '" + sd.kind + "'");
      }
      sd.args = unsigned_list(src, words[1]);
      std::optional<unsigned> degree;
      for (std::size_t i = 2; i < words.size(); i += 2) {
        if (i + 1 >= words.size()) src.fail(words[i].offset, "missing value");
        if (words[i].text == "seed") {
          sd.seed = to_unsigned(src, words[i + 1]);
        } else if (words[i].text == "degree") {
          degree = static_cast<unsigned>(to_unsigned(src, words[i + 1]));
        } else {
          src.fail(words[i].offset, "unknown scheme option '" + words[i].text + "'");
        }
      }
      if (sd.kind == "hypersurface_points") {
        if (!degree || sd.args.size() != 1) src.fail(begin, "hypersurface_points needs a count and a degree");
        sd.args.push_back(*degree);
      } else if (degree) {
        src.fail(begin, "degree only applies to hypersurface_points");
      }
      if (sd.kind == "points" && sd.args.size() != 1) src.fail(begin, "points takes a count");
      out.schemes.push_back(sd);
    } else if (keyword == "run") {
      if (words.empty()) src.fail(begin, "run needs a verb");
      for (const Word& w : words) out.run.push_back(w.text);
    } else if (keyword == "expect") {
      if (words.empty()) src.fail(begin, "expect needs a key and a value");
      std::size_t value_begin = words[0].offset + words[0].text.size();
      while (value_begin < semi && is_space(text[value_begin])) ++value_begin;
      Expectation e{words[0].text, trimmed(text, value_begin, semi)};
      if (e.value.empty()) src.fail(begin, "expect needs a value");
      if (nlohmann::json::parse(e.value, nullptr, false).is_discarded()) {
        src.fail(value_begin, "expected value is not valid JSON");
      }
      out.expectations.push_back(std::move(e));
    } else {
      src.fail(begin, "unknown statement '" + keyword + "'");
    }
  }
  if (!have_ring) throw ParseError("missing ring declaration", 1, 1);
  return out;
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                            const Field& field) {
  Source src(text);
  Ring ring{static_cast<int>(variables.size()), field};
  ExprParser ep(src, 0, text.size(), variables, ring);
  Polynomial f = ep.sum();
  if (!ep.at_end()) ep.fail("trailing input");
  return f;
}

std::string emit_source(const IdealSource& source) {
  std::ostringstream out;
  if (!source.label.empty()) out << "label " << source.label << ";\n";
  out << "ring ";
  for (std::size_t i = 0; i < source.variables.size(); ++i) {
    out << (i ? "," : "") << source.variables[i];
  }
  out << ";\nchar " << source.field.characteristic() << ";\n";
  if (!source.generators.empty() || source.schemes.empty()) {
    out << "ideal ";
    if (source.generators.empty()) out << "0";
    for (std::size_t i = 0; i < source.generators.size(); ++i) {
      out << (i ? ",\n  " : "") << source.generators[i].to_string(source.variables);
    }
    out << ";\n";
  }
  for (const SchemeDirective& s : source.schemes) {
    out << "scheme " << s.kind << " ";
    std::size_t count = s.kind == "hypersurface_points" ? 1 : s.args.size();
    for (std::size_t i = 0; i < count; ++i) out << (i ? "," : "") << s.args[i];
    if (s.kind == "hypersurface_points") out << " degree " << s.args[1];
    out << " seed " << s.seed << ";\n";
  }
  if (!source.run.empty()) {
    out << "run";
    for (const std::string& w : source.run) out << " " << w;
    out << ";\n";
  }
  for (const Expectation& e : source.expectations) out << "expect " << e.key << " " << e.value << ";\n";
  return out.str();
}

}  // namespace borelgin
