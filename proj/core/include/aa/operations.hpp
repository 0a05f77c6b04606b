#pragma once

#include <string_view>

#include "aa/interval.hpp"

namespace aa {

enum class BinaryOp { Add, Sub, Mul, Div, SqrtSum };

/// Direction of monotonicity in each argument: +1 increasing, -1 decreasing.
struct Monotonicity {
  int first;
  int second;
};

Monotonicity monotonicity(BinaryOp op);
bool is_symmetric(BinaryOp op);
std::string_view op_name(BinaryOp op);
/// Accepts add, sub, mul, div, sqrtsum (case-insensitive).
BinaryOp parse_op(std::string_view name);
/// Endpoint kind of images under `op`.
EndpointKind image_kind(BinaryOp op);

/// Exact value of op(x, y) for rational points.
Endpoint apply_op(BinaryOp op, const Rational& x, const Rational& y);

/// Exact image of the box I x J under a monotone operation.
///
/// Div requires J.lo > 0 (DivisionByZeroBoundary); Mul and SqrtSum require
/// nonnegative operands (NegativeOperand). Operands must be rational.
Interval box_image(BinaryOp op, const Interval& I, const Interval& J);

/// Normalized union of all pairwise box images.
IntervalUnion op_on_unions(BinaryOp op, const IntervalUnion& U, const IntervalUnion& V);

}  // namespace aa
