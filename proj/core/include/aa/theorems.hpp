#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aa/ifs.hpp"
#include "aa/operations.hpp"
#include "aa/oracle.hpp"
#include "aa/stability.hpp"
#include "aa/trace.hpp"

namespace aa {

enum class Claim { Sum, SumDigit, Diff, Div, SqrtSum };
enum class Status { CertifiedOnto, CertifiedNotOnto, Uncertified };

std::string_view claim_name(Claim c);
std::string_view status_name(Status s);

/// One lemma-mode closure used by a verdict, kept so it can be recomputed.
struct ClosureRecord {
  std::string label;
  BinaryOp op = BinaryOp::Add;
  WordSet first;
  WordSet second;
  IntervalUnion image;
};

struct Verdict {
  Claim claim = Claim::Sum;
  Rational lambda;
  Rational c;
  Status status = Status::Uncertified;
  /// Which construction produced the verdict, e.g. "small" or "orange".
  std::string path;
  /// Directly computed interval inside the image; for digit covers, the
  /// attractor hull.
  IntervalUnion seed;
  /// r with {0} u U_k r^k seed equal to the target.
  std::optional<Endpoint> scaling;
  Trace trace;
  /// Open interval missed by the image (NotOnto), or an uncovered stretch of a
  /// failed digit cover.
  std::optional<Interval> gap;
  std::vector<ClosureRecord> closures;
  std::string note;

  bool certified() const { return status != Status::Uncertified; }
};

/// K+K = [0,2] via I = J = [c-lambda,c] u [1-lambda,1], seed [2(c-lambda),2].
Verdict verify_sum(const Params& p);
/// K+K as the attractor of x -> lambda(x+d), d in {0,d1,d2,2d1,d1+d2,2d2}:
/// onto iff the six images of [0,2] cover it.
Verdict verify_sum_digit_ifs(const Params& p);
/// K-K with seven digits {-d2,-d1,d1-d2,0,d2-d1,d1,d2} over [-1,1].
Verdict verify_diff(const Params& p);
/// K/K = [0,inf) via the big path (lambda >= (3-sqrt5)/2) or the L1..L9 chain.
Verdict verify_div(const Params& p);
/// sqrt(K)+sqrt(K) = [0,2]: necessity witness, then the blue and orange paths.
Verdict verify_sqrtsum(const Params& p);

Verdict verify(Claim claim, const Params& p);

/// scaling * x for a rational or sqrt(r) scaling factor.
Endpoint scale_endpoint(const Endpoint& scaling, const Endpoint& x);

struct ProductSupport {
  unsigned density_depth = 6;
  Rational eps{1, 50};
  DensityResult density;
  /// One-step stability of x*y checked on {(3)} x {(3)} to this depth.
  unsigned stability_depth = 2;
  bool stability_ok = false;
  std::string stability_note;

  bool supported() const { return density.dense; }
};

struct CorollaryReport {
  Rational lambda;
  Rational c;
  TraceEntry condition;  // c >= (1-lambda)^2
  std::vector<Verdict> verdicts;  // sum, diff, div, sqrtsum
  std::optional<ProductSupport> product;
  bool all_supported = false;
  std::string note;
};

CorollaryReport corollary_report(const Params& p);

}  // namespace aa
