#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aa/rational.hpp"
#include "aa/trace.hpp"

namespace aa {

/// Named inequality systems in (lambda, c). The first eight are the CSV
/// columns, in order.
enum class Predicate : std::uint8_t {
  Fund,               // 0<lambda<1, lambda<=c<=2lambda, c+lambda<1
  Prod,               // c >= (1-lambda)^2
  Sqrt,               // sqrt(c)+1 >= 2sqrt(1-lambda)
  Blue,               // lambda+c<=1, lambda<=c<=2lambda, Sqrt, two sqrt-sum stability inequalities at a=c-lambda
  Orange3,            // Fund, Sqrt, the same pair at a=lambda-lambda^2, t=lambda^2
  Fig4,               // Fund, Sqrt, pair at a=lambda c-lambda^3, t=lambda^3, first-gap merges and containments
  Fig5,               // Fund, Sqrt, pair at a=c-lambda+lambda^2-lambda^3, t=lambda^3, second-gap containments
  SmallPathPre,       // c-lambda^2 >= 1-c-lambda
  UsefulConclusions,  // c>=(1-lambda)^2, 2lambda+c-1>=0, lambda+2c-1>=0, 4c+lambda>=1
};

inline constexpr std::size_t kPredicateCount = 9;
inline constexpr std::size_t kCsvPredicateCount = 8;
inline constexpr std::array<Predicate, kPredicateCount> kAllPredicates{
    Predicate::Fund,  Predicate::Prod,         Predicate::Sqrt,
    Predicate::Blue,  Predicate::Orange3,      Predicate::Fig4,
    Predicate::Fig5,  Predicate::SmallPathPre, Predicate::UsefulConclusions};

using Mask = std::uint16_t;

constexpr Mask bit(Predicate p) { return static_cast<Mask>(1u << static_cast<unsigned>(p)); }

std::string_view predicate_name(Predicate p);
/// Accepts "P_prod", "prod", "P_orange3", "orange", "fig3", ... (case-insensitive).
Predicate parse_predicate(std::string_view name);

struct PredicateEval {
  Predicate predicate;
  bool holds = false;
  Trace trace;
};

struct PointClass {
  Rational lambda;
  Rational c;
  Mask mask = 0;
  std::vector<PredicateEval> evals;  // one per predicate, in enum order

  bool holds(Predicate p) const { return (mask & bit(p)) != 0; }
};

/// Exact truth value and trace for every predicate. Total: radicands that
/// would be negative make the predicate false through an explicit entry.
PointClass classify_point(const Rational& lambda, const Rational& c);
PredicateEval evaluate_predicate(Predicate p, const Rational& lambda, const Rational& c);
/// Same truth values as classify_point without building traces.
Mask classify_mask(const Rational& lambda, const Rational& c);

struct GridSpec {
  Rational lmin{0};
  Rational lmax{1, 2};
  Rational cmin{0};
  Rational cmax{1};
  unsigned nx = 2;
  unsigned ny = 2;

  /// lmin + i (lmax - lmin)/(nx - 1).
  Rational lambda_at(unsigned i) const;
  Rational c_at(unsigned j) const;
};

struct GridPoint {
  Rational lambda;
  Rational c;
  Mask mask = 0;  // CSV predicates only

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Row-major over c (outer, increasing) then lambda.
struct RegionMap {
  unsigned nx = 0;
  unsigned ny = 0;
  std::vector<GridPoint> points;

  const GridPoint& at(unsigned i, unsigned j) const { return points[static_cast<std::size_t>(j) * nx + i]; }
  std::size_t count(Predicate p) const;

  friend bool operator==(const RegionMap&, const RegionMap&) = default;
};

/// Threads <= 0 means hardware concurrency. Output is independent of it.
RegionMap scan_grid(const GridSpec& spec, int threads = 0);

/// Disjunction of conjunctions of (possibly negated) predicates, written
/// like "P_blue|P_orange3" or "P_fund&P_sqrt&!P_prod".
class PredicateExpr {
 public:
  static PredicateExpr parse(std::string_view text);
  bool eval(Mask m) const;
  std::string str() const;
  /// Predicates the expression reads.
  Mask support() const;

 private:
  struct Literal {
    Predicate p;
    bool negated;
  };
  std::vector<std::vector<Literal>> terms_;
};

struct Counterexample {
  Rational lambda;
  Rational c;
  Mask mask = 0;
  /// First failing entry among the `to` predicates' traces.
  std::string reason;
};

struct ImplicationReport {
  std::string from;
  std::string to;
  std::size_t points = 0;
  std::size_t from_count = 0;
  std::vector<Counterexample> counterexamples;

  bool holds() const { return counterexamples.empty(); }
  /// CSV: lambda_num,lambda_den,c_num,c_den,reason
  std::string csv() const;
};

ImplicationReport check_implication(const PredicateExpr& from, const PredicateExpr& to, const GridSpec& grid,
                                    int threads = 0);

enum class RenderFormat { Svg, Pgm, Csv };

RenderFormat parse_render_format(std::string_view name);

/// Predicate sets that key the colors of each figure (1-5).
Mask figure_predicates(int figure);

/// Image text; colors depend only on mask & keys.
std::string render_map(const RegionMap& map, RenderFormat format, Mask keys = figure_predicates(1));
/// Writes render_map output to `path`; throws IoError.
void write_map(const RegionMap& map, const std::string& path, RenderFormat format, Mask keys = figure_predicates(1));

std::string map_csv(const RegionMap& map);
/// Inverse of map_csv; throws ParseError.
RegionMap parse_map_csv(std::string_view text);

/// 64-bit FNV-1a, for stable fixture digests.
std::uint64_t fnv1a(std::string_view text);

}  // namespace aa
