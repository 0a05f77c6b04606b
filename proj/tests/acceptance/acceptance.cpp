// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 9).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aa/oracle.hpp"
#include "aa/regions.hpp"
#include "aa/theorems.hpp"
#include "cli.hpp"

#ifndef AA_FIXTURE_DIR
#define AA_FIXTURE_DIR "."
#endif

namespace {

using namespace aa;
using Clock = std::chrono::steady_clock;

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    const auto& v = ok() ? notes_ : failures_;
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "; " : "") + v[i];
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <class F>
auto timed(double& seconds, F&& f) {
  const auto t0 = Clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Params P(const char* l, const char* c) { return Params::checked(Rational::parse(l), Rational::parse(c)); }

Interval iv(Endpoint lo, Endpoint hi) { return Interval(std::move(lo), std::move(hi)); }

SqrtSum2 as_sqrt2(const Endpoint& e) { return e.is_rational() ? SqrtSum2::of(e.rational()) : e.sqrt_sum(); }

// Replays every recorded sign from its operands; returns the radical entries seen.
int replay_trace(const Trace& t, Check& chk, const std::string& who) {
  int radical = 0;
  for (const auto& e : t) {
    int s = 0;
    if (e.lhs.is_rational() && e.rhs.is_rational()) {
      s = (e.lhs.rational() - e.rhs.rational()).sign();
    } else {
      ++radical;
      s = sign_of(cmp_sqrt2(as_sqrt2(e.lhs), as_sqrt2(e.rhs)));
    }
    chk.expect(s == e.sign, who + " entry '" + e.name + "' does not replay");
    chk.expect(e.holds(), who + " entry '" + e.name + "' fails");
  }
  return radical;
}

// x -> lambda x + s over the digit set, applied to M.
IntervalUnion digit_step(const Params& p, const std::vector<Rational>& digits, const IntervalUnion& M) {
  std::vector<Interval> out;
  for (const auto& s : digits) {
    for (const auto& part : M.parts()) {
      out.push_back(iv(p.lambda() * part.lo().rational() + s, p.lambda() * part.hi().rational() + s));
    }
  }
  return IntervalUnion::normalize(std::move(out));
}

std::vector<Rational> sum_digits(const Params& p) {
  std::vector<Rational> d;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) d.push_back(p.offset(i) + p.offset(j));
  }
  return d;
}

std::vector<Rational> diff_digits(const Params& p) {
  std::vector<Rational> d;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) d.push_back(p.offset(i) - p.offset(j));
  }
  return d;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Verdicts shared by criteria 1-6.
struct Certified {
  Verdict sum, sum_digit, diff, div_big, div_small, sqrtsum;
};

Certified& certified() {
  static Certified c{verify_sum(P("2/5", "9/20")),       verify_sum_digit_ifs(P("2/5", "9/20")),
                     verify_diff(P("2/5", "9/20")),      verify_div(P("9/20", "1/2")),
                     verify_div(P("7/20", "1/2")),       verify_sqrtsum(P("2/5", "9/20"))};
  return c;
}

void criterion1(Check& chk) {
  const Params p = P("2/5", "9/20");
  double t = 0;
  const Verdict v = timed(t, [&] { return verify_sum(p); });
  chk.expect(v.status == Status::CertifiedOnto, "sum status " + std::string(status_name(v.status)));
  chk.expect(v.seed == IntervalUnion(iv(Rational(1, 10), Rational(2))), "sum seed " + v.seed.str());
  chk.expect(v.scaling && *v.scaling == Endpoint(Rational(2, 5)), "sum scaling");
  chk.expect(t < 1.0, "sum took " + secs(t));
  replay_trace(v.trace, chk, "sum");
  double td = 0;
  const Verdict d = timed(td, [&] { return verify_sum_digit_ifs(p); });
  chk.expect(d.status == v.status, "digit variant disagrees");
  chk.expect(td < 1.0, "digit variant took " + secs(td));
  const auto cli = cli_run({"verify", "--claim", "sum", "--lambda", "2/5", "--c", "9/20"});
  const auto j = nlohmann::json::parse(cli.out, nullptr, false);
  chk.expect(cli.code == cli::kOk && !j.is_discarded() && j["status"] == "CertifiedOnto", "cli verify sum");
  chk.note("seed " + v.seed.str() + ", scaling 2/5, digit variant Onto, " + secs(t) + "/" + secs(td));
}

void criterion2(Check& chk) {
  const Params p = P("2/5", "9/20");
  const IntervalUnion target(iv(Rational(-1), Rational(1)));
  const auto digits = diff_digits(p);
  const auto image = digit_step(p, digits, target);
  chk.expect(image == target, "seven images merge to " + image.str());
  const Verdict v = verify_diff(p);
  chk.expect(v.status == Status::CertifiedOnto, "diff status " + std::string(status_name(v.status)));
  chk.expect(v.seed == target, "diff hull " + v.seed.str());
  replay_trace(v.trace, chk, "diff");

  const Params q = P("1/5", "1/4");
  const Verdict w = verify_diff(q);
  chk.expect(w.status != Status::CertifiedOnto, "diff at (1/5, 1/4) certified");
  chk.expect(w.gap.has_value(), "no gap at (1/5, 1/4)");
  if (w.gap) {
    const auto qimage = digit_step(q, diff_digits(q), target);
    chk.expect(qimage.disjoint_from_open(*w.gap), "reported gap meets the digit images");
    chk.note("merge " + image.str() + ", gap at (1/5, 1/4) " + w.gap->str());
  }
}

void criterion3(Check& chk) {
  double tb = 0;
  const Verdict big = timed(tb, [] { return verify_div(P("9/20", "1/2")); });
  chk.expect(big.status == Status::CertifiedOnto && big.path == "big", "big path: " + big.path);
  chk.expect(big.seed == IntervalUnion(iv(Rational(11, 20), Rational(20, 11))), "big seed " + big.seed.str());
  chk.expect(tb < 1.0, "big took " + secs(tb));
  replay_trace(big.trace, chk, "big");

  double ts = 0;
  const Verdict small = timed(ts, [] { return verify_div(P("7/20", "1/2")); });
  chk.expect(small.status == Status::CertifiedOnto && small.path == "small", "small path: " + small.path);
  chk.expect(small.seed == IntervalUnion(iv(Rational(151, 400), Rational(400, 151))), "small seed " + small.seed.str());
  chk.expect(ts < 1.0, "small took " + secs(ts));
  replay_trace(small.trace, chk, "small");
  int overlaps = 0;
  for (const auto& e : small.trace) {
    if (e.name.size() > 1 && e.name[0] == 'L' && e.name.find(".r >= L") != std::string::npos) {
      ++overlaps;
      chk.expect(e.sign >= 0, e.name + " negative");
    }
  }
  chk.expect(overlaps == 8, "overlap entries " + std::to_string(overlaps));
  chk.note("big " + big.seed.str() + " " + secs(tb) + ", small " + small.seed.str() + " with " +
           std::to_string(overlaps) + " overlaps >= 0 " + secs(ts));
}

void criterion4(Check& chk) {
  const Verdict v = verify_sqrtsum(P("2/5", "9/20"));
  chk.expect(v.status == Status::CertifiedOnto, "sqrtsum status " + std::string(status_name(v.status)));
  chk.expect(v.path == "blue" || v.path == "orange", "sqrtsum path " + v.path);
  const int radical = replay_trace(v.trace, chk, "sqrtsum");
  chk.expect(radical > 0, "no radical entries");

  const Params q = P("3/10", "2/5");
  const Verdict w = verify_sqrtsum(q);
  chk.expect(w.status == Status::CertifiedNotOnto, "necessity status " + std::string(status_name(w.status)));
  const Interval expect_gap = iv(SqrtSum2(Rational(1), Rational(2, 5)), SqrtSum2::twice_sqrt(Rational(7, 10)));
  chk.expect(w.gap && *w.gap == expect_gap, "necessity gap " + (w.gap ? w.gap->str() : std::string("none")));
  replay_trace(w.trace, chk, "necessity");
  const auto cover = outer_cover(BinaryOp::SqrtSum, q, 10, expect_gap).cover;
  chk.expect(cover.disjoint_from_open(expect_gap), "depth-10 cover meets the gap: " + cover.str());
  chk.note("Onto via " + v.path + " (" + std::to_string(radical) + " radical entries), gap " + expect_gap.str() +
           " clear at depth 10");
}

void criterion5(Check& chk) {
  const auto& all = certified();
  int closures = 0;
  for (const Verdict* v : {&all.sum, &all.div_big, &all.div_small, &all.sqrtsum}) {
    const Params p = Params::checked(v->lambda, v->c);
    chk.expect(!v->closures.empty(), std::string(claim_name(v->claim)) + " has no closures");
    for (const auto& cr : v->closures) {
      ++closures;
      const auto again = op_on_unions(cr.op, wordset_union(p, cr.first.refined(2)), wordset_union(p, cr.second.refined(2)));
      chk.expect(again.str() == cr.image.str(),
                 std::string(claim_name(v->claim)) + " " + cr.label + ": " + again.str() + " vs " + cr.image.str());
    }
  }
  for (const Verdict* v : {&all.sum_digit, &all.diff}) {
    const Params p = Params::checked(v->lambda, v->c);
    const auto digits = v->claim == Claim::Diff ? diff_digits(p) : sum_digits(p);
    const auto once = digit_step(p, digits, v->seed);
    const auto twice = digit_step(p, digits, once);
    chk.expect(once.str() == v->seed.str() && twice.str() == v->seed.str(),
               std::string(claim_name(v->claim)) + " digit hull moves: " + twice.str());
  }
  chk.note(std::to_string(closures) + " closures and 2 digit hulls unchanged after two ranks");
}

void criterion6(Check& chk) {
  const auto& all = certified();
  const std::vector<std::pair<const Verdict*, BinaryOp>> seeds{
      {&all.sum, BinaryOp::Add},     {&all.sum_digit, BinaryOp::Add}, {&all.diff, BinaryOp::Sub},
      {&all.div_big, BinaryOp::Div}, {&all.div_small, BinaryOp::Div}, {&all.sqrtsum, BinaryOp::SqrtSum}};
  double slowest = 0;
  for (const auto& [v, op] : seeds) {
    chk.expect(v->status == Status::CertifiedOnto, std::string(claim_name(v->claim)) + " not Onto");
    const Params p = Params::checked(v->lambda, v->c);
    for (const auto& part : v->seed.parts()) {
      double t = 0;
      const auto rep = timed(t, [&] { return gap_search(op, p, 8, part); });
      slowest = std::max(slowest, t);
      chk.expect(rep.gaps.empty(), std::string(claim_name(v->claim)) + " seed " + part.str() + " has gaps");
      chk.expect(t < 60.0, std::string(claim_name(v->claim)) + " gap search took " + secs(t));
    }
  }
  const Interval target = iv(Rational(0), Rational(2));
  double t1 = 0;
  const auto good = timed(t1, [] {
    return pairwise_density(BinaryOp::Add, enumerate_endpoints(P("2/5", "9/20"), 6), iv(Rational(0), Rational(2)),
                            Rational(1, 50));
  });
  chk.expect(good.dense, "density fails at (2/5, 9/20)");
  double t2 = 0;
  const auto bad = timed(t2, [&] {
    return pairwise_density(BinaryOp::Add, enumerate_endpoints(P("1/5", "1/4"), 6), target, Rational(1, 50));
  });
  chk.expect(!bad.dense, "density passes at (1/5, 1/4)");
  chk.expect(bad.worst_gap.has_value() && bad.first_uncovered.has_value(), "gap not located");
  chk.expect(t1 < 60.0 && t2 < 60.0, "density took " + secs(t1) + "/" + secs(t2));
  chk.note("6 seeds gap-free at depth 8 (slowest " + secs(slowest) + "), density gap at (1/5, 1/4) " +
           (bad.worst_gap ? bad.worst_gap->str() : std::string()));
}

void criterion7(Check& chk) {
  std::ifstream in(std::filesystem::path(AA_FIXTURE_DIR) / "implications_400.json");
  chk.expect(static_cast<bool>(in), "fixture missing");
  if (!in) return;
  const auto fx = nlohmann::json::parse(in);
  GridSpec grid;
  grid.nx = fx["nx"];
  grid.ny = fx["ny"];

  const auto forced = check_implication(PredicateExpr::parse("P_prod"), PredicateExpr::parse("P_sqrt"), grid);
  chk.expect(forced.points == 160000, "grid has " + std::to_string(forced.points) + " points");
  chk.expect(forced.holds(), "P_prod => P_sqrt has " + std::to_string(forced.counterexamples.size()) +
                                 " counterexamples");
  std::string frozen;
  for (const auto& f : fx["implications"]) {
    const auto from = f["from"].get<std::string>();
    const auto to = f["to"].get<std::string>();
    const auto rep = check_implication(PredicateExpr::parse(from), PredicateExpr::parse(to), grid);
    const auto again = check_implication(PredicateExpr::parse(from), PredicateExpr::parse(to), grid);
    const std::string digest = hex64(fnv1a(rep.csv()));
    chk.expect(rep.csv() == again.csv(), from + " => " + to + " not deterministic");
    chk.expect(rep.from_count == f["from_count"].get<std::size_t>(), from + " count " + std::to_string(rep.from_count));
    chk.expect(rep.counterexamples.size() == f["counterexamples"].get<std::size_t>(),
               from + " => " + to + " counterexamples " + std::to_string(rep.counterexamples.size()));
    chk.expect(digest == f["csv_fnv1a"].get<std::string>(), from + " => " + to + " digest " + digest);
    frozen += ", " + from + " => " + to + ": " + std::to_string(rep.counterexamples.size());
  }
  chk.note("P_prod => P_sqrt: 0" + frozen + " (match fixtures)");
}

void criterion8(Check& chk) {
  std::mt19937_64 rng(20260815);
  auto between = [&](const Rational& lo, const Rational& hi) {
    constexpr long long kDen = 4999;
    return lo + (hi - lo) * Rational(std::uniform_int_distribution<long long>(0, kDen)(rng), kDen);
  };
  int supported = 0;
  for (int found = 0; found < 25;) {
    const Rational l = between(Rational(1, 50), Rational(1, 2));
    const Rational c = between(l, 2 * l);
    const auto rep = validate_params(l, c);
    if (!rep.ok() || c < (1 - l) * (1 - l)) continue;
    ++found;
    const auto report = corollary_report(*rep.params);
    bool all_onto = report.verdicts.size() == 4;
    for (const auto& v : report.verdicts) all_onto = all_onto && v.status == Status::CertifiedOnto;
    const bool dense = report.product && report.product->density.dense;
    chk.expect(all_onto, rep.params->str() + " not all Onto");
    chk.expect(dense, rep.params->str() + " product density fails");
    chk.expect(report.all_supported, rep.params->str() + " not all supported");
    supported += all_onto && dense && report.all_supported;
  }
  chk.note(std::to_string(supported) + "/25 points: sum, diff, div, sqrtsum Onto and product dense");
}

void criterion9(Check& chk) {
  const auto dir = std::filesystem::temp_directory_path() / "aa_acceptance_scan";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::string first_csv;
  for (int fig = 1; fig <= 5; ++fig) {
    const auto svg = dir / ("fig" + std::to_string(fig) + ".svg");
    const auto r = cli_run({"--threads", "1", "scan", "--nx", "400", "--ny", "400", "--figure", std::to_string(fig),
                            "--out", svg.string()});
    chk.expect(r.code == cli::kOk, "scan figure " + std::to_string(fig) + " exit " + std::to_string(r.code));
    const std::string image = slurp(svg);
    const std::string csv = slurp(std::filesystem::path(svg).replace_extension(".csv"));
    chk.expect(image.find("<svg") != std::string::npos, "figure " + std::to_string(fig) + " svg missing");
    const auto map = parse_map_csv(csv);
    chk.expect(map.points.size() == 160000, "figure " + std::to_string(fig) + " csv rows");
    chk.expect(map_csv(map) == csv, "figure " + std::to_string(fig) + " csv does not round-trip");
    if (fig == 1) first_csv = csv;
    chk.expect(csv == first_csv, "figure " + std::to_string(fig) + " csv differs from figure 1");
  }
  const auto two = dir / "threads2.csv";
  const auto r = cli_run({"--threads", "2", "scan", "--nx", "400", "--ny", "400", "--out", two.string()});
  chk.expect(r.code == cli::kOk, "threaded scan exit " + std::to_string(r.code));
  chk.expect(slurp(two) == first_csv, "csv depends on thread count");
  std::ifstream in(std::filesystem::path(AA_FIXTURE_DIR) / "implications_400.json");
  if (in) {
    const auto fx = nlohmann::json::parse(in);
    chk.expect(hex64(fnv1a(first_csv)) == fx["scan_csv_fnv1a"].get<std::string>(),
               "scan digest " + hex64(fnv1a(first_csv)));
  }
  std::filesystem::remove_all(dir);
  chk.note("figures 1-5 svg+csv at 400x400, csv round-trips, threads 1 and 2 identical (" +
           hex64(fnv1a(first_csv)) + ")");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"sum theorem", criterion1},           {"difference theorem", criterion2},
      {"division, both paths", criterion3},  {"sqrt-sum sufficiency and necessity", criterion4},
      {"stability fixed points", criterion5}, {"oracle consistency", criterion6},
      {"implication suite", criterion7},     {"corollary support", criterion8},
      {"figure reproduction", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check chk;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(chk);
    } catch (const std::exception& e) {
      chk.expect(false, std::string("threw: ") + e.what());
    }
    const double t = std::chrono::duration<double>(Clock::now() - t0).count();
    failed += !chk.ok();
    std::cout << (chk.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << secs(t) << "] " << chk.summary() << std::endl;
  }
  return std::min(failed, 9);
}
