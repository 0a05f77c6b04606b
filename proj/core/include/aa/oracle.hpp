#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aa/ifs.hpp"
#include "aa/operations.hpp"

namespace aa {

inline constexpr unsigned kDefaultDepthLimit = 10;

/// Sorted, deduplicated {f_w(0), f_w(1) : |w| = depth}; every value lies in K.
/// Throws DepthLimit when depth > limit.
std::vector<Rational> enumerate_endpoints(const Params& p, unsigned depth, unsigned limit = kDefaultDepthLimit);

struct DensityResult {
  bool dense = false;
  std::size_t values = 0;
  /// Pairs skipped because op is undefined there (Div by zero).
  std::size_t skipped_pairs = 0;
  /// First eps-grid point with no value within eps.
  std::optional<Rational> first_uncovered;
  /// Widest open stretch of the target between consecutive computed values
  /// (target ends count as boundaries).
  std::optional<Interval> worst_gap;
};

/// Every point of the grid target.lo + k*eps (and target.hi) must have some
/// op(x, y), x, y in pts, within eps.
DensityResult pairwise_density(BinaryOp op, const std::vector<Rational>& pts, const Interval& target,
                               const Rational& eps);

struct OuterCover {
  IntervalUnion cover;
  /// Non-empty for Div: the part of each level touching 0 is dropped from the
  /// denominator.
  std::string restriction_note;
  std::size_t boxes_visited = 0;
};

/// op_on_unions(level_cover(depth), level_cover(depth)), clipped to `window`
/// when given. Computed by branch-and-bound down the nested levels: a pair is
/// skipped when its box misses the window or already lies in the collected
/// cover, since every descendant box lies inside its ancestors' box.
OuterCover outer_cover(BinaryOp op, const Params& p, unsigned depth,
                       const std::optional<Interval>& window = std::nullopt);

struct GapReport {
  std::vector<Interval> gaps;  // open intervals
  OuterCover cover;
};

/// Maximal open subintervals of window missed by the depth-n outer cover.
/// Rational windows are embedded for SqrtSum.
GapReport gap_search(BinaryOp op, const Params& p, unsigned depth, const Interval& window);

}  // namespace aa
