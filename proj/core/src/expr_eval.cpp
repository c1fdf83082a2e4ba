#include "lrkm/expr.hpp"
#include "lrkm/fracops.hpp"

namespace lrkm::expr {

namespace {

struct Env {
  const real& xi;
  const real& z;
  const real& zp;
};

real checked(const real& v, const char* what) {
  if (!isfinite(v)) throw EvalError(std::string(what) + " produced a non-finite value");
  return v;
}

real apply(Function fn, const real& x) {
  switch (fn) {
    case Function::sin: return checked(sin(x), "sin");
    case Function::cos: return checked(cos(x), "cos");
    case Function::tan: return checked(tan(x), "tan");
    case Function::exp: return checked(exp(x), "exp");
    case Function::ln:
      if (!(x > 0)) throw EvalError("ln of a non-positive argument");
      return log(x);
    case Function::sqrt:
      if (x < 0) throw EvalError("sqrt of a negative argument");
      return sqrt(x);
    case Function::abs: return abs(x);
    case Function::gamma:
      if (!(x > 0)) throw EvalError("gamma of a non-positive argument");
      return checked(lrkm::gamma(x), "gamma");
  }
  throw EvalError("unknown function");
}

real evaluate(const Node& node, const Env& env) {
  if (const auto* n = std::get_if<Number>(&node.data)) return n->value;
  if (const auto* v = std::get_if<Var>(&node.data)) {
    switch (v->which) {
      case Variable::xi: return env.xi;
      case Variable::z: return env.z;
      case Variable::zp: return env.zp;
    }
  }
  if (const auto* c = std::get_if<Const>(&node.data)) return c->which == Constant::pi ? pi() : euler_e();
  if (const auto* neg = std::get_if<Negate>(&node.data)) return -evaluate(*neg->operand, env);
  if (const auto* call = std::get_if<Call>(&node.data)) return apply(call->fn, evaluate(*call->arg, env));

  const auto& b = std::get<Binary>(node.data);
  const real lhs = evaluate(*b.lhs, env);
  const real rhs = evaluate(*b.rhs, env);
  switch (b.op) {
    case BinaryOp::add: return checked(lhs + rhs, "addition");
    case BinaryOp::sub: return checked(lhs - rhs, "subtraction");
    case BinaryOp::mul: return checked(lhs * rhs, "multiplication");
    case BinaryOp::div:
      if (rhs == 0) throw EvalError("division by zero");
      return checked(lhs / rhs, "division");
    case BinaryOp::pow: return checked(pow(lhs, rhs), "power");
  }
  throw EvalError("unknown operator");
}

}  // namespace

real Expr::operator()(const real& xi, const real& z, const real& zp) const {
  return evaluate(*root_, Env{xi, z, zp});
}

real eval(const Expr& e, const real& xi, const real& z, const real& zp) { return e(xi, z, zp); }

}  // namespace lrkm::expr
