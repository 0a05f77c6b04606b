#include "aa/stability.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "aa/error.hpp"

namespace aa {

StepCheck one_step_stable(BinaryOp op, const Interval& I, const Interval& J, const Params& p) {
  const IntervalUnion ti = tilde(p, I);
  const IntervalUnion tj = tilde(p, J);
  std::vector<Interval> boxes;
  for (const auto& x : ti.parts()) {
    for (const auto& y : tj.parts()) {
      Interval b = box_image(op, x, y);
      if (std::find(boxes.begin(), boxes.end(), b) == boxes.end()) boxes.push_back(std::move(b));
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const Interval& a, const Interval& b) {
    auto c = a.lo() <=> b.lo();
    return c != 0 ? c < 0 : a.hi() < b.hi();
  });

  StepCheck out;
  Endpoint reach = boxes.front().hi();
  for (std::size_t k = 1; k < boxes.size(); ++k) {
    out.trace.push_back(decide("reach(child " + std::to_string(k) + ") >= lo(child " + std::to_string(k + 1) + ")",
                               reach, boxes[k].lo()));
    if (reach < boxes[k].hi()) reach = boxes[k].hi();
  }
  const Interval whole = box_image(op, I, J);
  out.stable = all_hold(out.trace) && boxes.front().lo() == whole.lo() && reach == whole.hi();
  return out;
}

HypothesisCheck stability_hypotheses(BinaryOp op, const Interval& I, const Interval& J, const Params& p) {
  const Rational t = I.length();
  if (t != J.length()) {
    throw UnequalLengths("basic intervals " + I.str() + " and " + J.str() + " differ in length");
  }
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  const Rational a = std::min(I.lo().rational(), J.lo().rational());
  const Rational one_minus_lambda_sq = (1 - lambda) * (1 - lambda);

  HypothesisCheck out;
  auto& cond = out.conditions;
  switch (op) {
    case BinaryOp::Div:
      out.has_lemma = true;
      cond.push_back(decide("a >= 1-c-lambda", a, 1 - c - lambda));
      cond.push_back(decide("c >= (1-lambda)^2", c, one_minus_lambda_sq));
      cond.push_back(decide("lambda+2c-1 >= 0", lambda + 2 * c - 1, 0));
      cond.push_back(decide("2lambda+c-1 >= 0", 2 * lambda + c - 1, 0));
      break;
    case BinaryOp::Add:
      out.has_lemma = true;
      cond.push_back(decide("c >= (1-lambda)^2", c, one_minus_lambda_sq));
      cond.push_back(decide("2c+lambda-1 >= 0", 2 * c + lambda - 1, 0));
      cond.push_back(decide("c+2lambda-1 >= 0", c + 2 * lambda - 1, 0));
      break;
    case BinaryOp::SqrtSum: {
      out.has_lemma = true;
      const Rational shortfall = 1 - c - lambda;
      const Rational k = 3 - 4 * lambda - 4 * lambda * c - c * c - 2 * c;
      cond.push_back(decide("a >= (1-c-lambda)^2", a, shortfall * shortfall));
      cond.push_back(decide("8a(2lambda+c-1) >= t(3-4lambda-4lambda c-c^2-2c)", 8 * a * (2 * lambda + c - 1), t * k));
      cond.push_back(decide("2c+lambda-1 >= 0", 2 * c + lambda - 1, 0));
      cond.push_back(decide("2lambda+c-1 >= 0", 2 * lambda + c - 1, 0));
      break;
    }
    case BinaryOp::Sub:
    case BinaryOp::Mul:
      out.has_lemma = false;
      out.holds = false;
      return out;
  }
  out.holds = all_hold(cond);
  return out;
}

namespace {

ClosureResult lemma_closure(BinaryOp op, const WordSet& A, const WordSet& B, const Params& p) {
  Certificate cert;
  std::set<std::pair<Word, Word>> seen;
  for (const auto& wa : A.words()) {
    for (const auto& wb : B.words()) {
      if (seen.count({wb, wa}) || !seen.insert({wa, wb}).second) continue;
      const auto hyp = stability_hypotheses(op, basic_interval(p, wa), basic_interval(p, wb), p);
      ++cert.pairs_checked;
      if (!hyp.has_lemma || !hyp.holds) {
        Refusal r;
        r.first = wa;
        r.second = wb;
        if (!hyp.has_lemma) {
          r.condition = "no closed-form stability lemma for " + std::string(op_name(op));
        } else {
          r.condition = first_failure(hyp.conditions)->name;
        }
        r.trace = hyp.conditions;
        return {std::nullopt, std::move(r)};
      }
      append(cert.trace, hyp.conditions, wa.str() + "x" + wb.str() + ": ");
    }
  }
  cert.image = op_on_unions(op, wordset_union(p, A), wordset_union(p, B));
  cert.exact = true;
  return {std::move(cert), std::nullopt};
}

ClosureResult exhaustive_closure(BinaryOp op, const WordSet& A, const WordSet& B, const Params& p,
                                 unsigned depth) {
  Certificate cert;
  for (unsigned level = 0; level < depth; ++level) {
    const WordSet ra = A.refined(level);
    const WordSet rb = B.refined(level);
    std::vector<Interval> ia;
    std::vector<Interval> ib;
    for (const auto& w : ra.words()) ia.push_back(basic_interval(p, w));
    for (const auto& w : rb.words()) ib.push_back(basic_interval(p, w));
    for (std::size_t i = 0; i < ia.size(); ++i) {
      for (std::size_t j = 0; j < ib.size(); ++j) {
        auto step = one_step_stable(op, ia[i], ib[j], p);
        ++cert.pairs_checked;
        if (!step.stable) {
          Refusal r;
          r.first = ra.words()[i];
          r.second = rb.words()[j];
          r.depth = level;
          const auto* failing = first_failure(step.trace);
          r.condition = failing ? failing->name : "image extremes differ";
          r.trace = std::move(step.trace);
          return {std::nullopt, std::move(r)};
        }
      }
    }
  }
  cert.image = op_on_unions(op, wordset_union(p, A.refined(depth)), wordset_union(p, B.refined(depth)));
  cert.exact = false;
  cert.verified_depth = depth;
  return {std::move(cert), std::nullopt};
}

}  // namespace

ClosureResult stable_closure(BinaryOp op, const WordSet& A, const WordSet& B, const Params& p,
                             ClosureMode mode, unsigned depth) {
  if (mode == ClosureMode::Lemma) return lemma_closure(op, A, B, p);
  return exhaustive_closure(op, A, B, p, depth);
}

}  // namespace aa
