#include "mbqc/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <regex>
#include <set>

namespace mbqc::dsl {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line(line),
      column(column) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + s + "'");
  }
  return v;
}

// `[-]p/q pi`, `[-]p pi`, `[-]pi`, `[-]pi/q`, or `0`.
std::optional<Angle> rational_angle(const std::string& s) {
  static const std::regex fraction(R"((-?\d+)(?:\s*/\s*(\d+))?\s*pi)");
  static const std::regex bare_pi(R"((-?)pi(?:\s*/\s*(\d+))?)");
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    return Angle::pi_fraction(to_int(m[1]), m[2].matched ? to_int(m[2]) : 1);
  }
  if (std::regex_match(s, m, bare_pi)) {
    return Angle::pi_fraction(m[1].length() ? -1 : 1, m[2].matched ? to_int(m[2]) : 1);
  }
  return std::nullopt;
}

std::optional<double> real(const std::string& s) {
  static const std::regex number(R"(-?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)");
  if (!std::regex_match(s, number)) {
    return std::nullopt;
  }
  return std::strtod(s.c_str(), nullptr);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PatternDocument document() {
    keyword("pattern");
    PatternDocument doc;
    doc.name = word("pattern name");
    expect('{');
    std::vector<QubitId> space = id_field("space");
    space_ = std::set<QubitId>(space.begin(), space.end());
    std::vector<QubitId> inputs = id_field("input");
    std::vector<QubitId> outputs = id_field("output");
    skip();
    const std::size_t at = pos_;
    const std::string key = word("'seq' or 'paper_seq'");
    if (key != "seq" && key != "paper_seq") {
      fail_at(at, "expected 'seq' or 'paper_seq', found '" + key + "'");
    }
    expect(':');
    std::vector<Command> seq;
    while (skip(), peek() != ';') {
      seq.push_back(command());
    }
    expect(';');
    if (key == "paper_seq") {
      std::reverse(seq.begin(), seq.end());
    }
    expect('}');
    skip();
    if (pos_ != text_.size()) {
      fail("unexpected text after the closing brace");
    }
    try {
      doc.pattern = Pattern(std::move(space), std::move(inputs), std::move(outputs), std::move(seq));
    } catch (const PatternError& e) {
      fail_at(interface_at_, e.what());
    }
    return doc;
  }

 private:
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", found '") + peek() + "'" : " before end of input"));
    }
    ++pos_;
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' ||
           c == '-';
  }

  std::string word(const std::string& what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected " + what);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(const std::string& kw) {
    skip();
    const std::size_t at = pos_;
    if (word("'" + kw + "'") != kw) {
      fail_at(at, "expected '" + kw + "'");
    }
  }

  QubitId qubit(bool check_space) {
    skip();
    const std::size_t at = pos_;
    const std::string label = word("qubit label");
    if (!QubitId::is_valid_label(label)) {
      fail_at(at, "invalid qubit label '" + label + "'");
    }
    QubitId q(label);
    if (check_space && !space_.contains(q)) {
      fail_at(at, "qubit " + label + " is not in the computation space");
    }
    return q;
  }

  std::vector<QubitId> id_field(const std::string& name) {
    keyword(name);
    expect(':');
    if (name != "space") {
      interface_at_ = pos_;
    }
    std::vector<QubitId> ids;
    skip();
    while (peek() != ';') {
      ids.push_back(qubit(name != "space"));
      skip();
      if (peek() == ',') {
        ++pos_;
        skip();
      }
    }
    ++pos_;
    return ids;
  }

  // Raw text of one argument, up to the next top-level ',' or ')'.
  std::pair<std::size_t, std::string> argument() {
    skip();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '[' || c == '(') {
        ++depth;
      } else if ((c == ']' || c == ')') && depth > 0) {
        --depth;
      } else if ((c == ',' || c == ')') && depth == 0) {
        break;
      } else if (c == '\n' || c == ';') {
        break;
      }
      ++pos_;
    }
    return {start, trim(text_.substr(start, pos_ - start))};
  }

  Signal signal_at(const std::pair<std::size_t, std::string>& arg) {
    Signal s;
    try {
      s = parse_signal(arg.second);
    } catch (const std::invalid_argument& e) {
      fail_at(arg.first, e.what());
    }
    for (const auto& q : s.support()) {
      if (!space_.contains(q)) {
        fail_at(arg.first, "signal reads qubit " + q.label() + " outside the computation space");
      }
    }
    return s;
  }

  Command command() {
    skip();
    const std::size_t at = pos_;
    const char kind = peek();
    ++pos_;
    if (std::string_view("EMXZS").find(kind) == std::string_view::npos || kind == '\0') {
      fail_at(at, "expected a command E, M, X, Z or S");
    }
    expect('(');
    const QubitId q = qubit(true);
    Command out = Shift{q, {}};
    switch (kind) {
      case 'E': {
        expect(',');
        const QubitId r = qubit(true);
        if (r == q) {
          fail_at(at, "entanglement needs two distinct qubits");
        }
        out = Entangle(q, r);
        break;
      }
      case 'M': {
        expect(',');
        const auto arg = argument();
        Angle angle;
        try {
          angle = parse_angle(arg.second);
        } catch (const std::invalid_argument& e) {
          fail_at(arg.first, e.what());
        }
        Signal s;
        Signal t;
        bool seen_s = false;
        bool seen_t = false;
        while (skip(), peek() == ',') {
          ++pos_;
          skip();
          const std::size_t key_at = pos_;
          const char key = peek();
          ++pos_;
          expect('=');
          if (key == 's' && !seen_s && !seen_t) {
            s = signal_at(argument());
            seen_s = true;
          } else if (key == 't' && !seen_t) {
            t = signal_at(argument());
            seen_t = true;
          } else {
            fail_at(key_at, "expected 's=' or 't=' (in that order, each at most once)");
          }
        }
        out = Measure(q, angle, s, t);
        break;
      }
      default: {
        expect(',');
        const Signal s = signal_at(argument());
        if (kind == 'S') {
          out = Shift{q, s};
        } else {
          out = Correct{kind == 'X' ? Axis::X : Axis::Z, q, s};
        }
      }
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t interface_at_ = 0;
  std::set<QubitId> space_;
};

}  // namespace

Angle parse_angle(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) {
    throw std::invalid_argument("missing angle");
  }
  if (auto a = rational_angle(s)) {
    return *a;
  }
  if (auto x = real(s)) {
    return *x == 0.0 && s.find_first_of(".eE") == std::string::npos ? Angle()
                                                                  : Angle::radians(*x);
  }
  // `<radians> + <rational pi>`
  const auto plus = s.rfind('+');
  if (plus != std::string::npos) {
    const std::string head = trim(std::string_view(s).substr(0, plus));
    const std::string tail = trim(std::string_view(s).substr(plus + 1));
    auto x = real(head);
    auto a = rational_angle(tail);
    if (x && a && head.find_first_of(".eE") != std::string::npos) {
      return Angle::radians(*x) + *a;
    }
  }
  throw std::invalid_argument("malformed angle '" + s + "'");
}

Signal parse_signal(std::string_view text) {
  static const std::regex outcome(R"(s\s*\[\s*([A-Za-z0-9_]+'*)\s*\])");
  Signal out;
  std::string_view rest = text;
  while (true) {
    const auto plus = rest.find('+');
    const std::string term = trim(rest.substr(0, plus));
    std::smatch m;
    if (term == "0" || term == "1") {
      out += Signal(term == "1" ? 1 : 0);
    } else if (std::regex_match(term, m, outcome)) {
      out += Signal::outcome(QubitId(m[1].str()));
    } else {
      throw std::invalid_argument("malformed signal term '" + term + "'");
    }
    if (plus == std::string_view::npos) {
      break;
    }
    rest = rest.substr(plus + 1);
  }
  return out;
}

PatternDocument parse(std::string_view text) { return Parser(text).document(); }

namespace {

std::string id_list(const std::vector<QubitId>& ids) {
  std::string out;
  for (const auto& q : ids) {
    out += (out.empty() ? "" : ", ") + q.label();
  }
  return out;
}

}  // namespace

std::string paper_sequence(const Pattern& p) {
  std::string out;
  for (auto it = p.sequence().rbegin(); it != p.sequence().rend(); ++it) {
    out += (out.empty() ? "" : " ") + to_string(*it);
  }
  return out;
}

std::string serialize(const Pattern& p, const std::string& name, Order order) {
  std::string out = "pattern " + name + " {\n";
  out += "  space: " + id_list(p.space()) + ";\n";
  out += "  input: " + id_list(p.inputs()) + ";\n";
  out += "  output: " + id_list(p.outputs()) + ";\n";
  if (order == Order::Paper) {
    out += "  paper_seq: " + paper_sequence(p) + ";\n";
  } else {
    out += "  seq:";
    for (const auto& c : p.sequence()) {
      out += "\n    " + to_string(c);
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mbqc::dsl
