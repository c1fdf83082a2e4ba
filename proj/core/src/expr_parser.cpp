#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "lrkm/expr.hpp"

namespace lrkm::expr {

namespace {

constexpr const char* kEnd = "end of input";

struct NamedVariable {
  std::string_view name;
  Variable value;
};
struct NamedConstant {
  std::string_view name;
  Constant value;
};
struct NamedFunction {
  std::string_view name;
  Function value;
};

constexpr NamedVariable kVariables[] = {{"xi", Variable::xi}, {"z", Variable::z}, {"zp", Variable::zp}};
constexpr NamedConstant kConstants[] = {{"pi", Constant::pi}, {"e", Constant::e}};
constexpr NamedFunction kFunctions[] = {
    {"sin", Function::sin}, {"cos", Function::cos},   {"tan", Function::tan},
    {"exp", Function::exp}, {"ln", Function::ln},     {"sqrt", Function::sqrt},
    {"abs", Function::abs}, {"gamma", Function::gamma},
};

std::string describe(std::string_view src, std::size_t pos) {
  if (pos >= src.size()) return kEnd;
  return "'" + std::string(1, src[pos]) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    NodePtr root = parse_expr();
    skip_space();
    if (pos_ != src_.size()) {
      expect_at(pos_, kEnd);
      fail();
    }
    return root;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t expected_pos_ = 0;
  std::vector<std::string> expected_;

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  // Records a token that would have been accepted at `pos`; only the
  // furthest position reached is reported.
  void expect_at(std::size_t pos, std::string token) {
    if (pos > expected_pos_) {
      expected_pos_ = pos;
      expected_.clear();
    }
    if (pos == expected_pos_ && std::find(expected_.begin(), expected_.end(), token) == expected_.end()) {
      expected_.push_back(std::move(token));
    }
  }

  [[noreturn]] void fail() {
    std::string msg = "parse error at offset " + std::to_string(expected_pos_) + " (found " +
                      describe(src_, expected_pos_) + "), expected one of:";
    for (const auto& e : expected_) msg += " " + e;
    throw ParseError(expected_pos_, expected_, msg);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    expect_at(pos_, std::string("\"") + c + "\"");
    return false;
  }

  void require(char c) {
    if (!accept(c)) fail();
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Binary{BinaryOp::add, lhs, parse_term()});
      } else if (accept('-')) {
        lhs = make(Binary{BinaryOp::sub, lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Binary{BinaryOp::mul, lhs, parse_unary()});
      } else if (accept('/')) {
        lhs = make(Binary{BinaryOp::div, lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make(Negate{parse_unary()});
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) return make(Binary{BinaryOp::pow, base, parse_unary()});
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
      if (c == '(') {
        ++pos_;
        NodePtr inside = parse_expr();
        require(')');
        return inside;
      }
    }
    expect_at(start, "number");
    expect_at(start, "identifier");
    expect_at(start, "\"(\"");
    expect_at(start, "\"-\"");
    fail();
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++count;
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      expect_at(start, "number");
      fail();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      // An exponent marker must be followed by digits; "2e" is malformed.
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = save + 1;
        expect_at(pos_, "exponent digits");
        fail();
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    return make(Number{parse_real(text), text});
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    for (const auto& v : kVariables) {
      if (v.name == name) return make(Var{v.value});
    }
    for (const auto& c : kConstants) {
      if (c.name == name) return make(Const{c.value});
    }
    for (const auto& f : kFunctions) {
      if (f.name == name) {
        require('(');
        NodePtr arg = parse_expr();
        require(')');
        return make(Call{f.value, arg});
      }
    }
    throw UnknownIdentifierError(start, std::string(name));
  }

  template <class T>
  static NodePtr make(T value) {
    return std::make_shared<const Node>(Node{std::move(value)});
  }
};

std::string_view name_of(Variable v) {
  for (const auto& e : kVariables) {
    if (e.value == v) return e.name;
  }
  return "?";
}

std::string_view name_of(Constant c) {
  for (const auto& e : kConstants) {
    if (e.value == c) return e.name;
  }
  return "?";
}

std::string_view name_of(Function f) {
  for (const auto& e : kFunctions) {
    if (e.value == f) return e.name;
  }
  return "?";
}

char symbol_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::sub: return '-';
    case BinaryOp::mul: return '*';
    case BinaryOp::div: return '/';
    case BinaryOp::pow: return '^';
  }
  return '?';
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void print(const Node& node, std::string& out) {
  std::visit(Overloaded{
                 [&](const Number& n) { out += n.text; },
                 [&](const Var& v) { out += name_of(v.which); },
                 [&](const Const& c) { out += name_of(c.which); },
                 [&](const Negate& n) {
                   out += "-(";
                   print(*n.operand, out);
                   out += ")";
                 },
                 [&](const Binary& b) {
                   out += "(";
                   print(*b.lhs, out);
                   out += ") ";
                   out += symbol_of(b.op);
                   out += " (";
                   print(*b.rhs, out);
                   out += ")";
                 },
                 [&](const Call& c) {
                   out += name_of(c.fn);
                   out += "(";
                   print(*c.arg, out);
                   out += ")";
                 },
             },
             node.data);
}

void collect(const Node& node, std::set<std::string>& vars) {
  std::visit(Overloaded{
                 [](const Number&) {},
                 [&](const Var& v) { vars.insert(std::string(name_of(v.which))); },
                 [](const Const&) {},
                 [&](const Negate& n) { collect(*n.operand, vars); },
                 [&](const Binary& b) {
                   collect(*b.lhs, vars);
                   collect(*b.rhs, vars);
                 },
                 [&](const Call& c) { collect(*c.arg, vars); },
             },
             node.data);
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

UnknownIdentifierError::UnknownIdentifierError(std::size_t offset, std::string identifier)
    : ParseError(offset, {}, "unknown identifier '" + identifier + "' at offset " + std::to_string(offset)),
      identifier_(std::move(identifier)) {}

Expr::Expr(NodePtr root) : root_(std::move(root)) {}

std::string Expr::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

Expr parse(std::string_view src) { return Expr(Parser(src).parse_all()); }

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> vars;
  collect(e.root(), vars);
  return vars;
}

bool operator==(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(Overloaded{
                        [&](const Number& x) { return x.value == std::get<Number>(b.data).value; },
                        [&](const Var& x) { return x.which == std::get<Var>(b.data).which; },
                        [&](const Const& x) { return x.which == std::get<Const>(b.data).which; },
                        [&](const Negate& x) { return *x.operand == *std::get<Negate>(b.data).operand; },
                        [&](const Binary& x) {
                          const auto& y = std::get<Binary>(b.data);
                          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
                        },
                        [&](const Call& x) {
                          const auto& y = std::get<Call>(b.data);
                          return x.fn == y.fn && *x.arg == *y.arg;
                        },
                    },
                    a.data);
}

}  // namespace lrkm::expr
