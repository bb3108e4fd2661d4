#include "chpos/spec_text.hpp"

#include "chpos/errors.hpp"

#include <cctype>
#include <limits>

namespace chpos {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpaceSpec parse() {
    SpaceSpec s = space();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip();
    return text_.substr(pos_, tok.size()) == tok;
  }

  void expect(std::string_view tok) {
    if (!peek(tok)) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  int integer(bool allow_negative) {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      if (!allow_negative) fail("negative integers are only allowed as twists");
      negative = true;
      ++pos_;
      skip();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        pos_ = start;
        fail("integer out of range");
      }
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  std::vector<int> integer_list(bool allow_negative) {
    std::vector<int> out{integer(allow_negative)};
    while (peek(",")) {
      expect(",");
      out.push_back(integer(allow_negative));
    }
    return out;
  }

  std::string identifier() {
    skip();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  void keyword(std::string_view name) {
    const std::size_t at = (skip(), pos_);
    if (identifier() != name) {
      pos_ = at;
      fail("expected '" + std::string(name) + "('");
    }
    expect("(");
  }

  int twist() {
    keyword("O");
    const int w = integer(true);
    expect(")");
    return w;
  }

  SpaceSpec space() {
    skip();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name.empty() || !peek("(")) {
      pos_ = at;
      fail("expected a space: P, WP, G, CI, Prod, PB or Bl");
    }
    expect("(");
    if (name == "P") {
      const int n = integer(false);
      expect(")");
      return {ProjectiveSpaceSpec{n}};
    }
    if (name == "WP") {
      auto w = integer_list(false);
      expect(")");
      return {WeightedProjectiveSpec{std::move(w)}};
    }
    if (name == "G") {
      const int k = integer(false);
      expect(",");
      const int n = integer(false);
      expect(")");
      return {GrassmannianSpec{k, n}};
    }
    if (name == "CI") {
      SpaceSpec base = space();
      expect(";");
      auto d = integer_list(false);
      expect(")");
      return {CompleteIntersectionSpec{make_spec(std::move(base)), std::move(d)}};
    }
    if (name == "Prod") {
      SpaceSpec l = space();
      expect(",");
      SpaceSpec r = space();
      expect(")");
      return {ProductSpec{make_spec(std::move(l)), make_spec(std::move(r))}};
    }
    if (name == "PB") {
      SpaceSpec base = space();
      expect(";");
      std::vector<int> twists{twist()};
      while (peek(",")) {
        expect(",");
        twists.push_back(twist());
      }
      expect(")");
      return {ProjectiveBundleSpec{make_spec(std::move(base)), std::move(twists)}};
    }
    if (name == "Bl") {
      keyword("P");
      const int n = integer(false);
      expect(")");
      expect(";");
      keyword("L");
      const int m = integer(false);
      expect(")");
      expect(")");
      return {BlowupLinearSpec{n, m}};
    }
    pos_ = at;
    fail("unknown space constructor '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<int>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

SpaceSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string render(const SpaceSpec& spec) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ProjectiveSpaceSpec>) {
          return "P(" + std::to_string(x.n) + ")";
        } else if constexpr (std::is_same_v<T, WeightedProjectiveSpec>) {
          return "WP(" + join(x.weights, ",") + ")";
        } else if constexpr (std::is_same_v<T, GrassmannianSpec>) {
          return "G(" + std::to_string(x.k) + "," + std::to_string(x.n) + ")";
        } else if constexpr (std::is_same_v<T, CompleteIntersectionSpec>) {
          return "CI(" + render(*x.base) + "; " + join(x.degrees, ", ") + ")";
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return "Prod(" + render(*x.left) + ", " + render(*x.right) + ")";
        } else if constexpr (std::is_same_v<T, ProjectiveBundleSpec>) {
          std::string out = "PB(" + render(*x.base) + ";";
          for (std::size_t i = 0; i < x.twists.size(); ++i) {
            out += (i ? ", O(" : " O(") + std::to_string(x.twists[i]) + ")";
          }
          return out + ")";
        } else {
          return "Bl(P(" + std::to_string(x.n) + "); L(" + std::to_string(x.m) + "))";
        }
      },
      spec.node);
}

}  // namespace chpos
