#include "parse.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "litf/errors.hpp"

namespace litf::cli {
namespace {

enum class Tok { Var, Const, And, Or, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  int var = 0;          // 1-based variable index
  bool value = false;   // constant value
};

struct Node {
  enum Kind { Var, Const, And, Or } kind;
  int var = 0;
  bool value = false;
  std::unique_ptr<Node> lhs, rhs;

  static std::unique_ptr<Node> make(Kind kind) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    return n;
  }
};

bool starts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
  return s.substr(pos, prefix.size()) == prefix;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ >= text_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::End, text_.size()});
    return out;
  }

 private:
  Token next() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    for (std::string_view neg : {"!", "~", "-", "\xC2\xAC"}) {
      if (starts_with(text_, pos_, neg)) {
        throw ParseError("negation is not supported: expressions must be monotone", start);
      }
    }
    for (std::string_view op : {"&", "^", "*", ".", "\xC2\xB7", "\xE2\x88\xA7"}) {
      if (starts_with(text_, pos_, op)) {
        pos_ += op.size();
        return {Tok::And, start};
      }
    }
    for (std::string_view op : {"|", "+", "\xE2\x88\xA8"}) {
      if (starts_with(text_, pos_, op)) {
        pos_ += op.size();
        return {Tok::Or, start};
      }
    }
    if (c == '(' || c == ')') {
      ++pos_;
      return {c == '(' ? Tok::LParen : Tok::RParen, start};
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return {Tok::Const, start, 0, c == '1'};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("unexpected identifier; variables are x1..xn or single letters", start);
      }
      if (c == 'v') return {Tok::Or, start};
      if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        long index = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          index = index * 10 + (text_[pos_++] - '0');
          if (index > kMaxArity) throw ParseError("variable index exceeds the arity cap", start);
        }
        if (index < 1) throw ParseError("variable indices start at 1", start);
        use_indexed(start);
        return {Tok::Var, start, static_cast<int>(index)};
      }
      use_letters(start);
      auto found = letters_.find(c);
      if (found == std::string::npos) {
        letters_.push_back(c);
        found = letters_.size() - 1;
      }
      return {Tok::Var, start, static_cast<int>(found) + 1};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  void use_indexed(std::size_t at) {
    if (!letters_.empty()) throw ParseError("cannot mix x1..xn with letter variables", at);
    indexed_ = true;
  }

  void use_letters(std::size_t at) {
    if (indexed_) throw ParseError("cannot mix x1..xn with letter variables", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string letters_;
  bool indexed_ = false;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<Node> parse() {
    auto root = parse_or();
    if (peek().kind != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
    return root;
  }

  int max_var() const { return max_var_; }

 private:
  std::unique_ptr<Node> parse_or() {
    auto lhs = parse_and();
    while (peek().kind == Tok::Or) {
      ++at_;
      lhs = binary(Node::Or, std::move(lhs), parse_and());
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_and() {
    auto lhs = parse_factor();
    while (peek().kind == Tok::And) {
      ++at_;
      lhs = binary(Node::And, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_factor() {
    const Token t = tokens_[at_++];
    switch (t.kind) {
      case Tok::Var: {
        max_var_ = std::max(max_var_, t.var);
        auto n = Node::make(Node::Var);
        n->var = t.var;
        return n;
      }
      case Tok::Const: {
        auto n = Node::make(Node::Const);
        n->value = t.value;
        return n;
      }
      case Tok::LParen: {
        auto inner = parse_or();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        ++at_;
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of expression", t.pos);
      default:
        throw ParseError("expected a variable, constant or '('", t.pos);
    }
  }

  static std::unique_ptr<Node> binary(Node::Kind kind, std::unique_ptr<Node> l,
                                      std::unique_ptr<Node> r) {
    auto n = Node::make(kind);
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  const Token& peek() const { return tokens_[at_]; }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  int max_var_ = 0;
};

Bits evaluate(const Node& node, int n) {
  const std::size_t size = cube_size(n);
  switch (node.kind) {
    case Node::Var: {
      Bits out(size);
      for (std::size_t k = 0; k < size; ++k) {
        if ((k >> (node.var - 1)) & 1U) out.set(k);
      }
      return out;
    }
    case Node::Const:
      return node.value ? full_bits(size) : Bits(size);
    case Node::And:
      return evaluate(*node.lhs, n) & evaluate(*node.rhs, n);
    case Node::Or:
      return evaluate(*node.lhs, n) | evaluate(*node.rhs, n);
  }
  return Bits(size);
}

}  // namespace

BooleanFunction parse_truth_table(std::string_view text) {
  const std::size_t len = text.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw ParseError("truth table length " + std::to_string(len) +
                         " is not a power of two of at least 2",
                     0);
  }
  const int n = std::countr_zero(len);
  if (n > kMaxArity) throw ParseError("truth table exceeds the arity cap", 0);
  Bits truth(len);
  for (std::size_t k = 0; k < len; ++k) {
    if (text[k] == '1') {
      truth.set(k);
    } else if (text[k] != '0') {
      throw ParseError(std::string("unexpected character '") + text[k] + "' in truth table", k);
    }
  }
  return BooleanFunction(n, std::move(truth));
}

BooleanFunction parse_expression(std::string_view text, int min_arity) {
  Parser parser(Lexer(text).run());
  auto root = parser.parse();
  const int n = std::max(parser.max_var(), min_arity);
  if (n < 1) {
    throw ParseError("expression has no variables; give the arity explicitly", 0);
  }
  if (n > kMaxArity) throw ParseError("arity exceeds the cap of " + std::to_string(kMaxArity), 0);
  return BooleanFunction(n, evaluate(*root, n));
}

}  // namespace litf::cli
