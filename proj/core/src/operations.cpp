#include "aa/operations.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "aa/error.hpp"

namespace aa {

Monotonicity monotonicity(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Mul:
    case BinaryOp::SqrtSum:
      return {1, 1};
    case BinaryOp::Sub:
    case BinaryOp::Div:
      return {1, -1};
  }
  return {1, 1};
}

bool is_symmetric(BinaryOp op) { return monotonicity(op).second == 1; }

std::string_view op_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::Div: return "div";
    case BinaryOp::SqrtSum: return "sqrtsum";
  }
  return "?";
}

BinaryOp parse_op(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "add" || s == "sum" || s == "+") return BinaryOp::Add;
  if (s == "sub" || s == "diff" || s == "-") return BinaryOp::Sub;
  if (s == "mul" || s == "prod" || s == "*") return BinaryOp::Mul;
  if (s == "div" || s == "/") return BinaryOp::Div;
  if (s == "sqrtsum" || s == "sqrt") return BinaryOp::SqrtSum;
  throw ParseError("unknown operation '" + std::string(name) + "'");
}

EndpointKind image_kind(BinaryOp op) {
  return op == BinaryOp::SqrtSum ? EndpointKind::SqrtSum : EndpointKind::Rational;
}

Endpoint apply_op(BinaryOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case BinaryOp::Add: return x + y;
    case BinaryOp::Sub: return x - y;
    case BinaryOp::Mul: return x * y;
    case BinaryOp::Div:
      if (y.sign() <= 0) throw DivisionByZeroBoundary("division by nonpositive " + y.str());
      return x / y;
    case BinaryOp::SqrtSum: return SqrtSum2(x, y);
  }
  return Rational{};
}

Interval box_image(BinaryOp op, const Interval& I, const Interval& J) {
  const Rational& a = I.lo().rational();
  const Rational& b = I.hi().rational();
  const Rational& c = J.lo().rational();
  const Rational& d = J.hi().rational();
  switch (op) {
    case BinaryOp::Add:
      return Interval(a + c, b + d);
    case BinaryOp::Sub:
      return Interval(a - d, b - c);
    case BinaryOp::Mul:
      if (a.sign() < 0 || c.sign() < 0) throw NegativeOperand("mul on a box below zero");
      return Interval(a * c, b * d);
    case BinaryOp::Div:
      if (c.sign() <= 0) {
        throw DivisionByZeroBoundary("denominator interval " + J.str() + " touches zero");
      }
      if (a.sign() < 0) throw NegativeOperand("div numerator below zero");
      return Interval(a / d, b / c);
    case BinaryOp::SqrtSum:
      if (a.sign() < 0 || c.sign() < 0) throw NegativeOperand("sqrtsum on a box below zero");
      return Interval(SqrtSum2(a, c), SqrtSum2(b, d));
  }
  throw Error("unreachable");
}

IntervalUnion op_on_unions(BinaryOp op, const IntervalUnion& U, const IntervalUnion& V) {
  std::vector<Interval> boxes;
  boxes.reserve(U.size() * V.size());
  for (const auto& I : U.parts()) {
    for (const auto& J : V.parts()) boxes.push_back(box_image(op, I, J));
  }
  return IntervalUnion::normalize(std::move(boxes));
}

}  // namespace aa
