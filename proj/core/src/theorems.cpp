#include "aa/theorems.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "aa/error.hpp"

namespace aa {

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::Sum: return "sum";
    case Claim::SumDigit: return "sum-digit";
    case Claim::Diff: return "diff";
    case Claim::Div: return "div";
    case Claim::SqrtSum: return "sqrtsum";
  }
  return "?";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::CertifiedOnto: return "CertifiedOnto";
    case Status::CertifiedNotOnto: return "CertifiedNotOnto";
    case Status::Uncertified: return "Uncertified";
  }
  return "?";
}

Endpoint scale_endpoint(const Endpoint& scaling, const Endpoint& x) {
  if (scaling.is_rational()) {
    if (x.is_rational()) return scaling.rational() * x.rational();
    const Rational& r = scaling.rational();
    return x.sqrt_sum().scaled_by_sqrt(r * r);
  }
  const SqrtSum2& s = scaling.sqrt_sum();
  if (!s.b().is_zero()) throw Error("scaling must be rational or a single square root");
  return x.embedded().sqrt_sum().scaled_by_sqrt(s.a());
}

namespace {

Rational sq(const Rational& x) { return x * x; }

Endpoint S(const Rational& a, const Rational& b = Rational(0)) { return SqrtSum2(a, b); }

Verdict base(Claim claim, const Params& p) {
  Verdict v;
  v.claim = claim;
  v.lambda = p.lambda();
  v.c = p.c();
  return v;
}

// Entries showing `seed` lies inside one part of `cover`.
void require_cover(Trace& t, const std::string& name, const IntervalUnion& cover, const Interval& seed) {
  if (cover.empty()) throw std::logic_error("empty image");
  const auto& parts = cover.parts();
  auto it = std::upper_bound(parts.begin(), parts.end(), seed.lo(),
                             [](const Endpoint& x, const Interval& part) { return x < part.lo(); });
  if (it == parts.begin()) {
    t.push_back(decide(name + ": min(image) <= lo(seed)", cover.min(), seed.lo(), Relation::LE));
    return;
  }
  const Interval& part = *std::prev(it);
  t.push_back(decide(name + ": part.lo <= lo(seed)", part.lo(), seed.lo(), Relation::LE));
  t.push_back(decide(name + ": part.hi >= hi(seed)", part.hi(), seed.hi()));
}

struct PathResult {
  bool ok = false;
  Trace trace;
  std::vector<ClosureRecord> closures;
  IntervalUnion seed;
  std::optional<Endpoint> scaling;
  std::string failure;
};

// Runs a lemma-mode closure; on refusal records the failing condition.
std::optional<IntervalUnion> closure(PathResult& r, const std::string& label, BinaryOp op, const WordSet& A,
                                     const WordSet& B, const Params& p) {
  auto res = stable_closure(op, A, B, p, ClosureMode::Lemma);
  if (!res.ok()) {
    const Refusal& ref = *res.refusal;
    append(r.trace, ref.trace, label + " " + ref.first.str() + "x" + ref.second.str() + ": ");
    r.failure = label + ": " + ref.condition + " fails at " + ref.first.str() + "x" + ref.second.str();
    return std::nullopt;
  }
  append(r.trace, res.certificate->trace, label + " ");
  r.closures.push_back({label, op, A, B, res.certificate->image});
  return res.certificate->image;
}

void finish(PathResult& r) {
  r.ok = all_hold(r.trace);
  if (!r.ok && r.failure.empty()) r.failure = first_failure(r.trace)->name;
}

void adopt(Verdict& v, PathResult&& r) {
  append(v.trace, r.trace);
  for (auto& c : r.closures) v.closures.push_back(std::move(c));
  if (r.ok) {
    v.status = Status::CertifiedOnto;
    v.seed = std::move(r.seed);
    v.scaling = std::move(r.scaling);
  } else {
    v.status = Status::Uncertified;
    v.note = r.failure;
  }
}

// Attractor of x -> lambda (x + d) over `hull`: onto iff the images cover hull.
Verdict digit_cover(Claim claim, const Params& p, const std::vector<std::pair<std::string, Rational>>& digits,
                    const Interval& hull) {
  Verdict v = base(claim, p);
  v.path = "digit-ifs";
  const Rational& lambda = p.lambda();
  const Rational& lo = hull.lo().rational();
  const Rational& hi = hull.hi().rational();

  std::vector<std::pair<std::string, Interval>> images;
  for (const auto& [name, d] : digits) {
    images.emplace_back(name, Interval((lo + d) * lambda, (hi + d) * lambda));
  }
  std::stable_sort(images.begin(), images.end(),
                   [](const auto& a, const auto& b) { return a.second.lo() < b.second.lo(); });

  v.trace.push_back(decide("min left end <= " + lo.str(), images.front().second.lo(), lo, Relation::LE));
  Endpoint reach = images.front().second.hi();
  for (std::size_t k = 1; k < images.size(); ++k) {
    v.trace.push_back(decide("reach before g[" + images[k].first + "] >= its left end", reach, images[k].second.lo()));
    reach = std::max(reach, images[k].second.hi());
  }
  v.trace.push_back(decide("max right end >= " + hi.str(), reach, hi));

  std::vector<Interval> raw;
  for (const auto& im : images) raw.push_back(im.second);
  const IntervalUnion cover = IntervalUnion::normalize(std::move(raw));
  const auto gaps = cover.gaps_within(hull);

  v.seed = IntervalUnion(hull);
  v.scaling = Endpoint(lambda);
  if (all_hold(v.trace) && gaps.empty()) {
    v.status = Status::CertifiedOnto;
  } else {
    v.status = Status::Uncertified;
    if (!gaps.empty()) v.gap = gaps.front();
    v.note = "digit images leave " + cover.str() + " inside " + hull.str();
  }
  return v;
}

}  // namespace

Verdict verify_sum(const Params& p) {
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  Verdict v = base(Claim::Sum, p);
  v.path = "stability";
  v.trace.push_back(decide("c >= (1-lambda)^2", c, sq(1 - lambda)));
  if (!v.trace.back().holds()) {
    v.note = "c < (1-lambda)^2; only sufficiency is available";
    return v;
  }

  PathResult r;
  const WordSet top{Word{2}, Word{3}};
  const auto image = closure(r, "I+J", BinaryOp::Add, top, top, p);
  if (image) {
    r.trace.push_back(decide("2c >= 1+c-2lambda", 2 * c, 1 + c - 2 * lambda));
    r.trace.push_back(decide("1+c >= 2(1-lambda)", 1 + c, 2 * (1 - lambda)));
    const Interval seed(2 * (c - lambda), 2);
    require_cover(r.trace, "image covers seed", *image, seed);
    r.trace.push_back(decide("lambda*2 >= 2(c-lambda)", lambda * 2, 2 * (c - lambda)));
    r.seed = IntervalUnion(seed);
    r.scaling = Endpoint(lambda);
  }
  finish(r);
  adopt(v, std::move(r));
  return v;
}

Verdict verify_sum_digit_ifs(const Params& p) {
  const Rational d1 = p.c() / p.lambda() - 1;
  const Rational d2 = p.lambda().reciprocal() - 1;
  return digit_cover(Claim::SumDigit, p,
                     {{"0", Rational(0)}, {"d1", d1}, {"d2", d2}, {"2d1", 2 * d1}, {"d1+d2", d1 + d2}, {"2d2", 2 * d2}},
                     Interval(0, 2));
}

Verdict verify_diff(const Params& p) {
  const Rational d1 = p.c() / p.lambda() - 1;
  const Rational d2 = p.lambda().reciprocal() - 1;
  return digit_cover(Claim::Diff, p,
                     {{"-d2", -d2},
                      {"-d1", -d1},
                      {"d1-d2", d1 - d2},
                      {"0", Rational(0)},
                      {"d2-d1", d2 - d1},
                      {"d1", d1},
                      {"d2", d2}},
                     Interval(-1, 1));
}

namespace {

PathResult div_big(const Params& p) {
  const Rational& lambda = p.lambda();
  PathResult r;
  const WordSet top{Word{3}};
  const auto image = closure(r, "I/J", BinaryOp::Div, top, top, p);
  if (image) {
    const Interval seed(1 - lambda, (1 - lambda).reciprocal());
    require_cover(r.trace, "image covers seed", *image, seed);
    r.trace.push_back(decide("lambda/(1-lambda) >= 1-lambda", lambda / (1 - lambda), 1 - lambda));
    r.seed = IntervalUnion(seed);
    r.scaling = Endpoint(lambda);
  }
  finish(r);
  return r;
}

PathResult div_small(const Params& p) {
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  const Rational l2 = sq(lambda);
  const Rational cl = c - l2;               // c - lambda^2
  const Rational m = 1 - lambda;            // 1 - lambda
  const Rational mc = 1 - lambda + lambda * c;
  const Rational one2 = 1 - l2;             // 1 - lambda^2

  PathResult r;
  r.trace.push_back(decide("c-lambda^2 >= 1-c-lambda", cl, 1 - c - lambda));
  if (!r.trace.back().holds()) {
    finish(r);
    return r;
  }
  const WordSet parts{Word{2, 3}, Word{3, 1}, Word{3, 2}, Word{3, 3}};
  const auto image = closure(r, "I/J", BinaryOp::Div, parts, parts, p);
  if (!image) {
    finish(r);
    return r;
  }

  const Interval j11(cl / c, c / cl);
  const Interval j22(m / mc, mc / m);
  std::vector<Interval> L{
      Interval(cl, c / one2),
      Interval(cl / mc, c / m),
      Interval(m, mc / one2),
      j11,
      j22,
      Interval(one2, one2.reciprocal()),
      Interval(one2 / mc, m.reciprocal()),
      Interval(m / c, mc / cl),
      Interval(one2 / c, cl.reciprocal()),
  };
  const bool first_case = m / mc >= cl / c;
  r.trace.push_back(decide(first_case ? "(1-lambda)/(1-lambda+lambda c) >= (c-lambda^2)/c"
                                      : "(1-lambda)/(1-lambda+lambda c) < (c-lambda^2)/c",
                           m / mc, cl / c, first_case ? Relation::GE : Relation::LT));
  if (!first_case) std::swap(L[3], L[4]);

  std::vector<Interval> raw = L;
  if (IntervalUnion::normalize(std::move(raw)) != *image) {
    throw std::logic_error("L1..L9 do not reproduce the quotient image at " + p.str());
  }
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    const std::string a = "L" + std::to_string(i + 1);
    const std::string b = "L" + std::to_string(i + 2);
    r.trace.push_back(decide(a + ".r >= " + b + ".l", L[i].hi(), L[i + 1].lo()));
  }
  const Interval seed(cl, cl.reciprocal());
  require_cover(r.trace, "image covers seed", *image, seed);
  r.trace.push_back(decide("lambda/(c-lambda^2) >= c-lambda^2", lambda / cl, cl));
  r.seed = IntervalUnion(seed);
  r.scaling = Endpoint(lambda);
  finish(r);
  return r;
}

}  // namespace

Verdict verify_div(const Params& p) {
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  Verdict v = base(Claim::Div, p);
  v.trace.push_back(decide("c >= (1-lambda)^2", c, sq(1 - lambda)));
  if (!v.trace.back().holds()) {
    v.note = "c < (1-lambda)^2; only sufficiency is available";
    return v;
  }
  // lambda >= (3-sqrt5)/2  <=>  (3-2lambda)^2 <= 5, since 3-2lambda > 0.
  const Rational lhs = sq(3 - 2 * lambda);
  const bool big = lhs <= Rational(5);
  v.trace.push_back(decide(big ? "(3-2lambda)^2 <= 5" : "(3-2lambda)^2 > 5", lhs, 5, big ? Relation::LE : Relation::GT));
  v.path = big ? "big" : "small";
  adopt(v, big ? div_big(p) : div_small(p));
  return v;
}

namespace {

PathResult sqrt_blue(const Params& p) {
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  PathResult r;
  const WordSet top{Word{2}, Word{3}};
  const auto image = closure(r, "sqrt(I)+sqrt(J)", BinaryOp::SqrtSum, top, top, p);
  if (image) {
    r.trace.push_back(decide("2sqrt(c) >= sqrt(1-lambda)+sqrt(c-lambda)", S(4 * c), S(1 - lambda, c - lambda)));
    r.trace.push_back(decide("sqrt(c)+1 >= 2sqrt(1-lambda)", S(c, 1), S(4 * (1 - lambda))));
    const Interval seed(S(4 * (c - lambda)), S(4));
    require_cover(r.trace, "image covers seed", *image, seed);
    r.trace.push_back(decide("sqrt(lambda)*2 >= 2sqrt(c-lambda)", S(4 * lambda), S(4 * (c - lambda))));
    r.seed = IntervalUnion(seed);
    r.scaling = S(lambda);
  }
  finish(r);
  return r;
}

PathResult sqrt_orange(const Params& p) {
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  const Rational l2 = sq(lambda);
  const Rational l3 = l2 * lambda;
  const Rational ll = lambda - l2;  // lambda - lambda^2
  const Rational cl = c - l2;       // c - lambda^2
  const Rational m = 1 - lambda;
  const Rational mc = 1 - lambda + lambda * c;
  const Rational one2 = 1 - l2;

  PathResult r;
  const WordSet rank2{Word{1, 3}, Word{2, 3}, Word{3, 1}, Word{3, 2}, Word{3, 3}};
  const auto image = closure(r, "sqrt(I)+sqrt(J)", BinaryOp::SqrtSum, rank2, rank2, p);
  if (!image) {
    finish(r);
    return r;
  }
  const std::vector<Interval> H{
      Interval(S(4 * ll), S(4 * lambda)), Interval(S(ll, cl), S(lambda, c)),  Interval(S(ll, m), S(lambda, mc)),
      Interval(S(ll, one2), S(lambda, 1)), Interval(S(4 * cl), S(4 * c)),      Interval(S(cl, m), S(c, mc)),
      Interval(S(cl, one2), S(c, 1)),      Interval(S(4 * m), S(4 * mc)),      Interval(S(m, one2), S(mc, 1)),
      Interval(S(4 * one2), S(4)),
  };
  std::vector<Interval> raw = H;
  if (IntervalUnion::normalize(std::move(raw)) != *image) {
    throw std::logic_error("H1..H10 do not reproduce the sqrt-sum image at " + p.str());
  }
  for (int i : {3, 6, 7, 8, 9}) {
    const std::string a = "H" + std::to_string(i);
    const std::string b = "H" + std::to_string(i + 1);
    r.trace.push_back(decide(a + ".r >= " + b + ".l", H[i - 1].hi(), H[i].lo()));
  }

  // First gap (sqrt(lambda)+sqrt(c), sqrt(lambda-lambda^2)+sqrt(1-lambda)).
  const WordSet ga{Word{1, 2, 3}};
  const WordSet gb{Word{3, 2, 1}, Word{3, 2, 2}, Word{3, 2, 3}, Word{3, 3, 1}, Word{3, 3, 2}};
  const auto g1 = closure(r, "gap1", BinaryOp::SqrtSum, ga, gb, p);
  if (!g1) {
    finish(r);
    return r;
  }
  const Rational lc = lambda * c;
  r.trace.push_back(decide("gap1 merge: sqrt(lambda c)+sqrt(1-lambda+lambda c-lambda^2+lambda^2 c) >= "
                           "sqrt(lambda c-lambda^3)+sqrt(1-lambda+lambda c-lambda^3)",
                           S(lc, mc - l2 + l2 * c), S(lc - l3, mc - l3)));
  r.trace.push_back(decide("gap1 merge: sqrt(lambda c)+sqrt(1-lambda+lambda c) >= sqrt(lambda c-lambda^3)+sqrt(1-lambda^2)",
                           S(lc, mc), S(lc - l3, one2)));
  const Interval G1(S(lc - l3, mc - l2), S(lc, one2 + l2 * c));
  r.trace.push_back(decide("G1.l <= sqrt(lambda)+sqrt(c)", G1.lo(), S(lambda, c), Relation::LE));
  r.trace.push_back(decide("G1.r >= sqrt(lambda-lambda^2)+sqrt(1-lambda)", G1.hi(), S(ll, m)));

  // Second gap (sqrt(lambda)+1, sqrt(c-lambda^2)+sqrt(1-lambda)).
  const auto g2 = closure(r, "gap2", BinaryOp::SqrtSum, WordSet{Word{2, 1, 3}}, WordSet{Word{3, 3, 1}}, p);
  if (!g2) {
    finish(r);
    return r;
  }
  const Rational shifted = c - lambda + l2;  // c - lambda + lambda^2
  const Interval G2(S(shifted - l3, one2), S(shifted, one2 + l3));
  r.trace.push_back(decide("G2.l <= sqrt(lambda)+1", G2.lo(), S(lambda, 1), Relation::LE));
  r.trace.push_back(decide("G2.r >= sqrt(c-lambda^2)+sqrt(1-lambda)", G2.hi(), S(cl, m)));

  r.trace.push_back(decide("2sqrt(lambda) >= sqrt(lambda-lambda^2)+sqrt(c-lambda^2)", S(4 * lambda), S(ll, cl)));
  const Interval seed(S(ll, cl), S(4));
  std::vector<Interval> all = image->parts();
  all.insert(all.end(), g1->parts().begin(), g1->parts().end());
  all.insert(all.end(), g2->parts().begin(), g2->parts().end());
  require_cover(r.trace, "images cover seed", IntervalUnion::normalize(std::move(all)), seed);
  r.seed = IntervalUnion(seed);
  r.scaling = S(lambda);
  finish(r);
  return r;
}

}  // namespace

Verdict verify_sqrtsum(const Params& p) {
  const Rational& lambda = p.lambda();
  const Rational& c = p.c();
  Verdict v = base(Claim::SqrtSum, p);
  const Endpoint lhs = S(c, 1);
  const Endpoint rhs = S(4 * (1 - lambda));
  if (lhs < rhs) {
    v.trace.push_back(decide("sqrt(c)+1 < 2sqrt(1-lambda)", lhs, rhs, Relation::LT));
    v.status = Status::CertifiedNotOnto;
    v.path = "necessity";
    v.gap = Interval(lhs, rhs);
    v.note = "sqrt(K) lies in [0,sqrt(c)] u [sqrt(1-lambda),1], so sums avoid (1+sqrt(c), 2sqrt(1-lambda))";
    return v;
  }
  v.trace.push_back(decide("sqrt(c)+1 >= 2sqrt(1-lambda)", lhs, rhs));

  PathResult blue = sqrt_blue(p);
  if (blue.ok) {
    v.path = "blue";
    adopt(v, std::move(blue));
    return v;
  }
  PathResult orange = sqrt_orange(p);
  if (orange.ok) {
    v.path = "orange";
    adopt(v, std::move(orange));
    return v;
  }
  const std::string note = "blue: " + blue.failure + "; orange: " + orange.failure;
  Trace both;
  append(both, blue.trace, "blue: ");
  append(both, orange.trace, "orange: ");
  append(v.trace, both);
  v.status = Status::Uncertified;
  v.note = note;
  return v;
}

Verdict verify(Claim claim, const Params& p) {
  switch (claim) {
    case Claim::Sum: return verify_sum(p);
    case Claim::SumDigit: return verify_sum_digit_ifs(p);
    case Claim::Diff: return verify_diff(p);
    case Claim::Div: return verify_div(p);
    case Claim::SqrtSum: return verify_sqrtsum(p);
  }
  throw Error("unknown claim");
}

CorollaryReport corollary_report(const Params& p) {
  CorollaryReport rep;
  rep.lambda = p.lambda();
  rep.c = p.c();
  rep.condition = decide("c >= (1-lambda)^2", p.c(), sq(1 - p.lambda()));
  if (!rep.condition.holds()) {
    Verdict necessity = verify_sqrtsum(p);
    if (necessity.status == Status::CertifiedNotOnto) rep.verdicts.push_back(std::move(necessity));
    rep.note = "c < (1-lambda)^2: no certification attempted beyond necessity witnesses";
    return rep;
  }
  for (Claim claim : {Claim::Sum, Claim::Diff, Claim::Div, Claim::SqrtSum}) rep.verdicts.push_back(verify(claim, p));

  ProductSupport prod;
  prod.density = pairwise_density(BinaryOp::Mul, enumerate_endpoints(p, prod.density_depth), Interval(0, 1), prod.eps);
  const auto closure = stable_closure(BinaryOp::Mul, WordSet{Word{3}}, WordSet{Word{3}}, p, ClosureMode::Exhaustive,
                                      prod.stability_depth);
  prod.stability_ok = closure.ok();
  prod.stability_note = closure.ok() ? "x*y stable on [1-lambda,1]^2 to depth " + std::to_string(prod.stability_depth)
                                     : "x*y unstable at " + closure.refusal->first.str() + "x" +
                                           closure.refusal->second.str() + ": " + closure.refusal->condition;
  rep.product = std::move(prod);

  rep.all_supported = rep.product->supported() &&
                      std::all_of(rep.verdicts.begin(), rep.verdicts.end(),
                                  [](const Verdict& v) { return v.status == Status::CertifiedOnto; });
  rep.note = "product is supported by oracle density only, not certified";
  return rep;
}

}  // namespace aa
