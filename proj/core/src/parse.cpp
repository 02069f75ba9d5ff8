#include "klrw/parse.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace klrw {

ParseError::ParseError(std::string msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

namespace {

// Character cursor with 1-based line/column bookkeeping.  All lookahead is
// single-character; the grammar is LL(1) after the leading atom letter.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Peek past the current character, ignoring the whitespace state.
  char peek_raw_at(std::size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }

  char take() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    advance();
    return c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  long long nat(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000LL) fail("number out of range");
      advance();
    }
    return v;
  }

  int line() const { return line_; }
  int column() const { return col_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Parser {
  Cursor cur;
  const QuiverConfig& cfg;

  Parser(const std::string& text, const QuiverConfig& c) : cur(text), cfg(c) {}

  int chamber(const char* what) {
    int l = cur.line(), c = cur.column();
    long long v = cur.nat("a chamber index");
    if (v > cfg.max_object())
      throw ParseError(std::string(what) + " index " + std::to_string(v) +
                           " outside chambers 0.." + std::to_string(cfg.max_object()),
                       l, c);
    return static_cast<int>(v);
  }

  // atom ['*s^' nat]; returns the normal form letter with its location.
  Mor factor(int& line, int& col) {
    line = cur.line();
    col = cur.column();
    char kind = cur.take();
    if (kind != 'e' && kind != 'p' && kind != 'q' && kind != 's' && kind != 'a')
      throw ParseError("expected a morphism atom e/p/q/s/a", line, col);
    cur.expect('(');
    Mor m;
    if (kind == 'a') {
      int j = chamber("target");
      cur.expect(',');
      int i = chamber("source");
      m = a(j, i);
    } else {
      int i = chamber("strand");
      switch (kind) {
        case 'e': m = e(i); break;
        case 's': m = s(i); break;
        case 'p':
          if (i == 0) throw ParseError("p(0) does not exist", line, col);
          m = p(i);
          break;
        default:
          if (i == cfg.max_object())
            throw ParseError("q(" + std::to_string(i) + ") does not exist at " +
                                 std::to_string(cfg.punctures) + " punctures",
                             line, col);
          m = q(i);
      }
    }
    cur.expect(')');
    // postfix dots: '*' only continues the factor when followed by 's^'
    if (cur.peek() == '*' && cur.peek_raw_at(1) == 's' && cur.peek_raw_at(2) == '^') {
      cur.expect('*');
      cur.take();  // s
      cur.take();  // ^
      m.dots += static_cast<int>(cur.nat("a dot count"));
    }
    return m;
  }

  // [rational '*'] factor ('.' factor)*
  AlgElem term() {
    Rat coeff(1);
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      long long num = cur.nat("a scalar");
      long long den = 1;
      if (cur.peek() == '/') {
        cur.take();
        int l = cur.line(), c = cur.column();
        den = cur.nat("a denominator");
        if (den == 0) throw ParseError("division by zero", l, c);
      }
      coeff = Rat(num) / Rat(den);
      cur.expect('*');
    }
    int line, col;
    Mor acc = factor(line, col);
    while (cur.peek() == '.') {
      cur.take();
      int l2, c2;
      Mor next = factor(l2, c2);
      if (acc.src != next.tgt)
        throw ParseError("cannot compose after source chamber " +
                             std::to_string(acc.src) + ": factor " + to_string(next) +
                             " has target " + std::to_string(next.tgt),
                         l2, c2);
      acc = mu2(acc, next);
    }
    return AlgElem(acc, coeff);
  }

  // ['-'] term (('+'|'-') term)* | '0'
  AlgElem expr() {
    if (cur.peek() == '0') {
      char next = cur.peek_raw_at(1);
      if (!std::isdigit(static_cast<unsigned char>(next)) && next != '*' && next != '/') {
        cur.take();
        return AlgElem::zero();
      }
    }
    AlgElem out;
    Rat sign(1);
    if (cur.peek() == '-') {
      cur.take();
      sign = Rat(-1);
    }
    out += sign * term();
    while (cur.peek() == '+' || cur.peek() == '-') {
      sign = Rat(cur.take() == '+' ? 1 : -1);
      out += sign * term();
    }
    return out;
  }

  std::vector<AlgElem> chain() {
    std::vector<AlgElem> out;
    if (cur.peek() == '[') {
      cur.take();
      out.push_back(expr());
      while (cur.peek() == '|') {
        cur.take();
        out.push_back(expr());
      }
      cur.expect(']');
    } else {
      out.push_back(expr());
    }
    return out;
  }

  void end() {
    if (!cur.done()) cur.fail("trailing input after expression");
  }
};

}  // namespace

AlgElem parse_morphism(const std::string& text, const QuiverConfig& cfg) {
  Parser p(text, cfg);
  AlgElem out = p.expr();
  p.end();
  return out;
}

std::vector<AlgElem> parse_chain(const std::string& text, const QuiverConfig& cfg) {
  Parser p(text, cfg);
  std::vector<AlgElem> out = p.chain();
  p.end();
  return out;
}

std::string to_string(const std::vector<AlgElem>& chain) {
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < chain.size(); ++t) {
    if (t) os << " | ";
    os << to_string(chain[t]);
  }
  os << "]";
  return os.str();
}

}  // namespace klrw
