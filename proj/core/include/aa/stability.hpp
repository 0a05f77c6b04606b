#pragma once

#include <optional>
#include <string>

#include "aa/ifs.hpp"
#include "aa/operations.hpp"
#include "aa/trace.hpp"

namespace aa {

struct StepCheck {
  bool stable = false;
  /// One entry per adjacency between consecutive child boxes (sorted by lo):
  /// running right end >= next left end.
  Trace trace;
};

/// Decides op(I, J) == op(tilde(I), tilde(J)) exactly for two basic intervals
/// of equal rank.
StepCheck one_step_stable(BinaryOp op, const Interval& I, const Interval& J, const Params& p);

struct HypothesisCheck {
  bool holds = false;
  /// False for Sub and Mul, which have no closed-form stability condition.
  bool has_lemma = false;
  Trace conditions;
};

/// Closed-form sufficient conditions for stability of op at the pair (I, J)
/// and at every refinement of it. The pair is oriented so that `a` is the
/// smaller left endpoint; `t` is the common length (UnequalLengths otherwise).
///
///   Div:     a >= 1-c-lambda, c >= (1-lambda)^2, lambda+2c-1 >= 0, 2lambda+c-1 >= 0
///   Add:     c >= (1-lambda)^2, 2c+lambda-1 >= 0, c+2lambda-1 >= 0
///   SqrtSum: a >= (1-c-lambda)^2, 8a(2lambda+c-1) >= t(3-4lambda-4lambda c-c^2-2c),
///            2c+lambda-1 >= 0, 2lambda+c-1 >= 0
///
/// Div is not symmetric; x/y and y/x images are reciprocal, so stability of
/// one orientation is equivalent to the other and the smaller-left orientation
/// covers both.
HypothesisCheck stability_hypotheses(BinaryOp op, const Interval& I, const Interval& J, const Params& p);

enum class ClosureMode { Lemma, Exhaustive };

struct Certificate {
  IntervalUnion image;
  /// Lemma mode: image equals op on (K n union(A)) x (K n union(B)).
  /// Exhaustive mode: one-step stability verified to `verified_depth` only.
  bool exact = false;
  unsigned verified_depth = 0;
  std::size_t pairs_checked = 0;
  Trace trace;
};

struct Refusal {
  Word first;
  Word second;
  unsigned depth = 0;
  std::string condition;
  Trace trace;
};

struct ClosureResult {
  std::optional<Certificate> certificate;
  std::optional<Refusal> refusal;

  bool ok() const { return certificate.has_value(); }
};

/// Lemma mode checks stability_hypotheses on every pair of basic intervals of
/// A x B and returns op_on_unions(union(A), union(B)) as an exact value.
/// Exhaustive mode checks one_step_stable on all pairs of descendants for
/// `depth` refinement steps and returns op on the depth-refined unions, tagged
/// with that depth.
ClosureResult stable_closure(BinaryOp op, const WordSet& A, const WordSet& B, const Params& p,
                             ClosureMode mode, unsigned depth = 0);

}  // namespace aa
