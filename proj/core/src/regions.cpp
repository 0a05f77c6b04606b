#include "aa/regions.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "aa/error.hpp"

namespace aa {

std::string_view predicate_name(Predicate p) {
  switch (p) {
    case Predicate::Fund: return "P_fund";
    case Predicate::Prod: return "P_prod";
    case Predicate::Sqrt: return "P_sqrt";
    case Predicate::Blue: return "P_blue";
    case Predicate::Orange3: return "P_orange3";
    case Predicate::Fig4: return "P_fig4";
    case Predicate::Fig5: return "P_fig5";
    case Predicate::SmallPathPre: return "P_smallpath_pre";
    case Predicate::UsefulConclusions: return "P_useful_conclusions";
  }
  return "?";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Predicate parse_predicate(std::string_view name) {
  std::string n = lower(trim(name));
  if (n.rfind("p_", 0) == 0) n = n.substr(2);
  static const std::map<std::string, Predicate> table{
      {"fund", Predicate::Fund},
      {"prod", Predicate::Prod},
      {"sqrt", Predicate::Sqrt},
      {"blue", Predicate::Blue},
      {"fig2", Predicate::Blue},
      {"orange3", Predicate::Orange3},
      {"orange", Predicate::Orange3},
      {"fig3", Predicate::Orange3},
      {"fig4", Predicate::Fig4},
      {"fig5", Predicate::Fig5},
      {"smallpath_pre", Predicate::SmallPathPre},
      {"smallpath", Predicate::SmallPathPre},
      {"useful_conclusions", Predicate::UsefulConclusions},
      {"useful", Predicate::UsefulConclusions},
  };
  auto it = table.find(n);
  if (it == table.end()) throw ParseError("unknown predicate '" + std::string(name) + "'");
  return it->second;
}

namespace {

bool relation_holds(Relation rel, int sign) {
  switch (rel) {
    case Relation::GE: return sign >= 0;
    case Relation::GT: return sign > 0;
    case Relation::LE: return sign <= 0;
    case Relation::LT: return sign < 0;
    case Relation::EQ: return sign == 0;
  }
  return false;
}

// Evaluates a conjunction. Without `keep` it stops at the first failure and
// builds no trace.
class Recorder {
 public:
  explicit Recorder(bool keep) : keep_(keep) {}

  bool check(const char* name, const Endpoint& lhs, const Endpoint& rhs, Relation rel = Relation::GE) {
    if (!ok_ && !keep_) return false;
    bool holds;
    if (keep_) {
      trace_.push_back(decide(name, lhs, rhs, rel));
      holds = trace_.back().holds();
    } else {
      holds = relation_holds(rel, sign_of(compare_embedding(lhs, rhs)));
    }
    ok_ = ok_ && holds;
    return holds;
  }

  bool ok() const { return ok_; }
  Trace take() { return std::move(trace_); }

 private:
  bool keep_;
  bool ok_ = true;
  Trace trace_;
};

Endpoint S(const Rational& a, const Rational& b = Rational(0)) { return SqrtSum2(a, b); }

void fund(Recorder& r, const Rational& l, const Rational& c) {
  r.check("lambda > 0", l, 0, Relation::GT);
  r.check("lambda < 1", l, 1, Relation::LT);
  r.check("c >= lambda", c, l);
  r.check("c <= 2lambda", c, 2 * l, Relation::LE);
  r.check("c+lambda < 1", c + l, 1, Relation::LT);
}

void sqrt_condition(Recorder& r, const Rational& l, const Rational& c) {
  if (!r.check("c >= 0", c, 0)) return;
  if (!r.check("1-lambda >= 0", 1 - l, 0)) return;
  r.check("sqrt(c)+1 >= 2sqrt(1-lambda)", S(c, 1), S(4 * (1 - l)));
}

// a >= (1-c-lambda)^2 and 8a(2lambda+c-1) >= t(3-4lambda-4lambda c-c^2-2c).
void stability_pair(Recorder& r, const Rational& l, const Rational& c, const Rational& a, const Rational& t) {
  const Rational s = 1 - c - l;
  r.check("a >= (1-c-lambda)^2", a, s * s);
  r.check("8a(2lambda+c-1) >= t(3-4lambda-4lambda c-c^2-2c)", 8 * a * (2 * l + c - 1),
          t * (3 - 4 * l - 4 * l * c - c * c - 2 * c));
}

void blue_extra(Recorder& r, const Rational& l, const Rational& c) {
  r.check("c-lambda >= (1-c-lambda)^2", c - l, (1 - c - l) * (1 - c - l));
  r.check("8(c-lambda)(2lambda+c-1) >= lambda(3-4lambda-4lambda c-c^2-2c)", 8 * (c - l) * (2 * l + c - 1),
          l * (3 - 4 * l - 4 * l * c - c * c - 2 * c));
}

void orange_extra(Recorder& r, const Rational& l, const Rational& c) { stability_pair(r, l, c, l - l * l, l * l); }

void fig4_extra(Recorder& r, const Rational& l, const Rational& c) {
  const Rational l2 = l * l;
  const Rational l3 = l2 * l;
  const Rational lc = l * c;
  const Rational mc = 1 - l + lc;
  stability_pair(r, l, c, lc - l3, l3);
  r.check("sqrt(lambda c)+sqrt(1-lambda+lambda c-lambda^2+lambda^2 c) >= sqrt(lambda c-lambda^3)+sqrt(1-lambda+lambda c-lambda^3)",
          S(lc, mc - l2 + l2 * c), S(lc - l3, mc - l3));
  r.check("sqrt(lambda c)+sqrt(1-lambda+lambda c) >= sqrt(lambda c-lambda^3)+sqrt(1-lambda^2)", S(lc, mc),
          S(lc - l3, 1 - l2));
  r.check("sqrt(lambda c-lambda^3)+sqrt(1-lambda+lambda c-lambda^2) <= sqrt(lambda)+sqrt(c)", S(lc - l3, mc - l2), S(l, c),
          Relation::LE);
  r.check("sqrt(lambda c)+sqrt(1-lambda^2+lambda^2 c) >= sqrt(lambda-lambda^2)+sqrt(1-lambda)", S(lc, 1 - l2 + l2 * c),
          S(l - l2, 1 - l));
  r.check("2sqrt(lambda) >= sqrt(lambda-lambda^2)+sqrt(c-lambda^2)", S(4 * l), S(l - l2, c - l2));
}

void fig5_extra(Recorder& r, const Rational& l, const Rational& c) {
  const Rational l2 = l * l;
  const Rational l3 = l2 * l;
  const Rational shifted = c - l + l2;
  stability_pair(r, l, c, shifted - l3, l3);
  r.check("sqrt(c-lambda+lambda^2-lambda^3)+sqrt(1-lambda^2) <= sqrt(lambda)+1", S(shifted - l3, 1 - l2), S(l, 1),
          Relation::LE);
  r.check("sqrt(c-lambda^2)+sqrt(1-lambda) <= sqrt(c-lambda+lambda^2)+sqrt(1-lambda^2+lambda^3)", S(c - l2, 1 - l),
          S(shifted, 1 - l2 + l3), Relation::LE);
}

void evaluate(Predicate p, Recorder& r, const Rational& l, const Rational& c) {
  switch (p) {
    case Predicate::Fund:
      fund(r, l, c);
      return;
    case Predicate::Prod:
      r.check("c >= (1-lambda)^2", c, (1 - l) * (1 - l));
      return;
    case Predicate::Sqrt:
      sqrt_condition(r, l, c);
      return;
    case Predicate::Blue:
      r.check("lambda+c <= 1", l + c, 1, Relation::LE);
      r.check("c >= lambda", c, l);
      r.check("c <= 2lambda", c, 2 * l, Relation::LE);
      if (!r.ok()) return;
      sqrt_condition(r, l, c);
      if (!r.ok()) return;
      blue_extra(r, l, c);
      return;
    case Predicate::Orange3:
    case Predicate::Fig4:
    case Predicate::Fig5:
      fund(r, l, c);
      if (!r.ok()) return;
      sqrt_condition(r, l, c);
      if (!r.ok()) return;
      if (p == Predicate::Orange3) orange_extra(r, l, c);
      if (p == Predicate::Fig4) fig4_extra(r, l, c);
      if (p == Predicate::Fig5) fig5_extra(r, l, c);
      return;
    case Predicate::SmallPathPre:
      r.check("c-lambda^2 >= 1-c-lambda", c - l * l, 1 - c - l);
      return;
    case Predicate::UsefulConclusions:
      r.check("c >= (1-lambda)^2", c, (1 - l) * (1 - l));
      r.check("2lambda+c-1 >= 0", 2 * l + c - 1, 0);
      r.check("lambda+2c-1 >= 0", l + 2 * c - 1, 0);
      r.check("4c+lambda >= 1", 4 * c + l, 1);
      return;
  }
}

bool fast(const std::function<void(Recorder&)>& body) {
  Recorder r(false);
  body(r);
  return r.ok();
}

}  // namespace

PredicateEval evaluate_predicate(Predicate p, const Rational& lambda, const Rational& c) {
  Recorder r(true);
  evaluate(p, r, lambda, c);
  PredicateEval out;
  out.predicate = p;
  out.holds = r.ok();
  out.trace = r.take();
  return out;
}

PointClass classify_point(const Rational& lambda, const Rational& c) {
  PointClass pc;
  pc.lambda = lambda;
  pc.c = c;
  for (Predicate p : kAllPredicates) {
    pc.evals.push_back(evaluate_predicate(p, lambda, c));
    if (pc.evals.back().holds) pc.mask |= bit(p);
  }
  return pc;
}

Mask classify_mask(const Rational& l, const Rational& c) {
  Mask m = 0;
  auto set = [&](Predicate p, bool v) {
    if (v) m |= bit(p);
  };
  const bool is_fund = fast([&](Recorder& r) { fund(r, l, c); });
  const bool is_sqrt = fast([&](Recorder& r) { sqrt_condition(r, l, c); });
  set(Predicate::Fund, is_fund);
  set(Predicate::Sqrt, is_sqrt);
  for (Predicate p : {Predicate::Prod, Predicate::Blue, Predicate::SmallPathPre, Predicate::UsefulConclusions}) {
    set(p, fast([&](Recorder& r) { evaluate(p, r, l, c); }));
  }
  if (is_fund && is_sqrt) {
    set(Predicate::Orange3, fast([&](Recorder& r) { orange_extra(r, l, c); }));
    set(Predicate::Fig4, fast([&](Recorder& r) { fig4_extra(r, l, c); }));
    set(Predicate::Fig5, fast([&](Recorder& r) { fig5_extra(r, l, c); }));
  }
  return m;
}

Rational GridSpec::lambda_at(unsigned i) const {
  return lmin + (lmax - lmin) * Rational(i) / Rational(static_cast<long long>(nx) - 1);
}

Rational GridSpec::c_at(unsigned j) const {
  return cmin + (cmax - cmin) * Rational(j) / Rational(static_cast<long long>(ny) - 1);
}

std::size_t RegionMap::count(Predicate p) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const GridPoint& g) { return (g.mask & bit(p)) != 0; }));
}

namespace {

constexpr Mask kCsvMask = static_cast<Mask>((1u << kCsvPredicateCount) - 1);

unsigned worker_count(int threads) {
  if (threads > 0) return static_cast<unsigned>(threads);
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_grid(const GridSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw Error("grid needs nx, ny >= 2");
  if (spec.lmax < spec.lmin || spec.cmax < spec.cmin) throw Error("grid ranges must be increasing");
}

// Evaluates `row(j)` for every row on a pool of workers.
void for_each_row(unsigned ny, int threads, const std::function<void(unsigned)>& row) {
  const unsigned workers = std::min(worker_count(threads), ny);
  std::atomic<unsigned> next{0};
  auto work = [&] {
    for (unsigned j = next++; j < ny; j = next++) row(j);
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

// Full nine-bit masks for every grid point, row-major.
std::vector<GridPoint> full_scan(const GridSpec& spec, int threads) {
  check_grid(spec);
  std::vector<Rational> lambdas;
  for (unsigned i = 0; i < spec.nx; ++i) lambdas.push_back(spec.lambda_at(i));
  std::vector<GridPoint> pts(static_cast<std::size_t>(spec.nx) * spec.ny);
  for_each_row(spec.ny, threads, [&](unsigned j) {
    const Rational c = spec.c_at(j);
    for (unsigned i = 0; i < spec.nx; ++i) {
      GridPoint& g = pts[static_cast<std::size_t>(j) * spec.nx + i];
      g.lambda = lambdas[i];
      g.c = c;
      g.mask = classify_mask(lambdas[i], c);
    }
  });
  return pts;
}

}  // namespace

RegionMap scan_grid(const GridSpec& spec, int threads) {
  RegionMap map;
  map.nx = spec.nx;
  map.ny = spec.ny;
  map.points = full_scan(spec, threads);
  for (auto& g : map.points) g.mask &= kCsvMask;
  return map;
}

PredicateExpr PredicateExpr::parse(std::string_view text) {
  PredicateExpr e;
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty predicate expression");
  // getline drops a trailing empty field, so split by hand.
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      const auto pos = s.find(sep, start);
      out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
      if (pos == std::string_view::npos) return out;
      start = pos + 1;
    }
  };
  for (const auto& term : split(t, '|')) {
    std::vector<Literal> conj;
    for (const auto& lit : split(term, '&')) {
      std::string l = trim(lit);
      if (l.empty()) throw ParseError("empty literal in '" + t + "'");
      bool neg = false;
      while (!l.empty() && (l[0] == '!' || l[0] == '~')) {
        neg = !neg;
        l = trim(l.substr(1));
      }
      conj.push_back({parse_predicate(l), neg});
    }
    if (conj.empty()) throw ParseError("empty term in '" + t + "'");
    e.terms_.push_back(std::move(conj));
  }
  return e;
}

bool PredicateExpr::eval(Mask m) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& conj) {
    return std::all_of(conj.begin(), conj.end(),
                       [&](const Literal& l) { return ((m & bit(l.p)) != 0) != l.negated; });
  });
}

std::string PredicateExpr::str() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += "|";
    for (std::size_t k = 0; k < terms_[i].size(); ++k) {
      if (k) out += "&";
      if (terms_[i][k].negated) out += "!";
      out += predicate_name(terms_[i][k].p);
    }
  }
  return out;
}

Mask PredicateExpr::support() const {
  Mask m = 0;
  for (const auto& conj : terms_) {
    for (const auto& l : conj) m |= bit(l.p);
  }
  return m;
}

std::string ImplicationReport::csv() const {
  std::string out = "lambda_num,lambda_den,c_num,c_den,reason\n";
  for (const auto& ce : counterexamples) {
    out += ce.lambda.numerator().get_str() + "," + ce.lambda.denominator().get_str() + "," +
           ce.c.numerator().get_str() + "," + ce.c.denominator().get_str() + ",\"" + ce.reason + "\"\n";
  }
  return out;
}

namespace {

std::string failure_reason(const PredicateExpr& to, const Rational& l, const Rational& c, Mask m) {
  std::string reason;
  for (Predicate p : kAllPredicates) {
    if (!(to.support() & bit(p))) continue;
    if (!reason.empty()) reason += "; ";
    if (m & bit(p)) {
      reason += std::string(predicate_name(p)) + " holds";
    } else {
      const auto ev = evaluate_predicate(p, l, c);
      const TraceEntry* f = first_failure(ev.trace);
      reason += std::string(predicate_name(p)) + " fails: " + (f ? f->name : "?");
    }
  }
  return reason;
}

}  // namespace

ImplicationReport check_implication(const PredicateExpr& from, const PredicateExpr& to, const GridSpec& grid,
                                    int threads) {
  ImplicationReport rep;
  rep.from = from.str();
  rep.to = to.str();
  const auto pts = full_scan(grid, threads);
  rep.points = pts.size();
  for (const auto& g : pts) {
    if (!from.eval(g.mask)) continue;
    ++rep.from_count;
    if (to.eval(g.mask)) continue;
    rep.counterexamples.push_back({g.lambda, g.c, g.mask, failure_reason(to, g.lambda, g.c, g.mask)});
  }
  return rep;
}

RenderFormat parse_render_format(std::string_view name) {
  const std::string n = lower(name);
  if (n == "svg") return RenderFormat::Svg;
  if (n == "pgm") return RenderFormat::Pgm;
  if (n == "csv") return RenderFormat::Csv;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

Mask figure_predicates(int figure) {
  const Mask base = bit(Predicate::Fund) | bit(Predicate::Sqrt);
  switch (figure) {
    case 1: return base | bit(Predicate::Prod);
    case 2: return base | bit(Predicate::Blue);
    case 3: return base | bit(Predicate::Orange3);
    case 4: return base | bit(Predicate::Fig4);
    case 5: return base | bit(Predicate::Fig5);
    default: throw Error("figures are numbered 1-5");
  }
}

namespace {

constexpr std::array<const char*, 16> kPalette{
    "#ffffff", "#d9d9d9", "#9ecae1", "#3182bd", "#fdd0a2", "#fd8d3c", "#e6550d", "#a63603",
    "#c7e9c0", "#74c476", "#31a354", "#006d2c", "#dadaeb", "#9e9ac8", "#756bb1", "#54278f"};

// Index of (mask & keys) among the combinations of the key bits.
unsigned combo_index(Mask mask, Mask keys) {
  unsigned idx = 0;
  unsigned pos = 0;
  for (unsigned b = 0; b < kPredicateCount; ++b) {
    if (!(keys & (1u << b))) continue;
    if (mask & (1u << b)) idx |= 1u << pos;
    ++pos;
  }
  return idx;
}

unsigned key_bits(Mask keys) {
  unsigned n = 0;
  for (unsigned b = 0; b < kPredicateCount; ++b) n += (keys >> b) & 1u;
  return n;
}

std::string combo_label(unsigned idx, Mask keys) {
  std::string out;
  unsigned pos = 0;
  for (Predicate p : kAllPredicates) {
    if (!(keys & bit(p))) continue;
    if (idx & (1u << pos)) {
      if (!out.empty()) out += " & ";
      out += predicate_name(p);
    }
    ++pos;
  }
  return out.empty() ? "none" : out;
}

std::string svg(const RegionMap& map, Mask keys) {
  const unsigned side = std::max(map.nx, map.ny);
  const unsigned cell = std::max(1u, 600 / side);
  const unsigned w = cell * map.nx;
  const unsigned h = cell * map.ny;
  std::map<unsigned, std::size_t> used;
  for (const auto& g : map.points) ++used[combo_index(g.mask, keys)];
  const unsigned legend = 24 * static_cast<unsigned>(used.size()) + 12;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << std::max(w, 360u) << "\" height=\"" << h + legend
     << "\" shape-rendering=\"crispEdges\">\n";
  os << "<g id=\"cells\">\n";
  for (unsigned j = 0; j < map.ny; ++j) {
    for (unsigned i = 0; i < map.nx; ++i) {
      const unsigned idx = combo_index(map.at(i, j).mask, keys);
      os << "<rect class=\"cell\" x=\"" << i * cell << "\" y=\"" << (map.ny - 1 - j) * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << kPalette[idx % kPalette.size()] << "\"/>\n";
    }
  }
  os << "</g>\n<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  unsigned y = h + 8;
  for (const auto& [idx, n] : used) {
    os << "<rect class=\"key\" x=\"4\" y=\"" << y << "\" width=\"16\" height=\"16\" fill=\""
       << kPalette[idx % kPalette.size()] << "\" stroke=\"#000\"/>";
    os << "<text x=\"26\" y=\"" << y + 13 << "\">" << combo_label(idx, keys) << " (" << n << ")</text>\n";
    y += 24;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string pgm(const RegionMap& map, Mask keys) {
  const unsigned levels = (1u << key_bits(keys)) - 1;
  std::string out = "P5\n" + std::to_string(map.nx) + " " + std::to_string(map.ny) + "\n255\n";
  for (unsigned row = 0; row < map.ny; ++row) {
    const unsigned j = map.ny - 1 - row;
    for (unsigned i = 0; i < map.nx; ++i) {
      const unsigned idx = combo_index(map.at(i, j).mask, keys);
      out.push_back(static_cast<char>(255 - (levels ? idx * 255 / levels : 0)));
    }
  }
  return out;
}

}  // namespace

std::string map_csv(const RegionMap& map) {
  std::string out = "lambda_num,lambda_den,c_num,c_den";
  for (std::size_t k = 0; k < kCsvPredicateCount; ++k) out += "," + std::string(predicate_name(kAllPredicates[k]));
  out += "\n";
  for (const auto& g : map.points) {
    out += g.lambda.numerator().get_str() + "," + g.lambda.denominator().get_str() + "," + g.c.numerator().get_str() +
           "," + g.c.denominator().get_str();
    for (std::size_t k = 0; k < kCsvPredicateCount; ++k) out += (g.mask >> k) & 1u ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

RegionMap parse_map_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  const std::string header = map_csv(RegionMap{}).substr(0, map_csv(RegionMap{}).size() - 1);
  if (trim(line) != header) throw ParseError("unexpected CSV header: " + line);
  RegionMap map;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) f.push_back(trim(cell));
    if (f.size() != 4 + kCsvPredicateCount) throw ParseError("bad CSV row: " + line);
    GridPoint g;
    g.lambda = Rational::parse(f[0] + "/" + f[1]);
    g.c = Rational::parse(f[2] + "/" + f[3]);
    for (std::size_t k = 0; k < kCsvPredicateCount; ++k) {
      const std::string& b = f[4 + k];
      if (b != "0" && b != "1") throw ParseError("bad bit '" + b + "'");
      if (b == "1") g.mask |= static_cast<Mask>(1u << k);
    }
    map.points.push_back(std::move(g));
  }
  if (map.points.empty()) throw ParseError("CSV has no rows");
  unsigned nx = 0;
  while (nx < map.points.size() && map.points[nx].c == map.points.front().c) ++nx;
  if (map.points.size() % nx != 0) throw ParseError("CSV rows do not form a grid");
  map.nx = nx;
  map.ny = static_cast<unsigned>(map.points.size() / nx);
  return map;
}

std::string render_map(const RegionMap& map, RenderFormat format, Mask keys) {
  if (map.points.empty()) throw Error("empty region map");
  switch (format) {
    case RenderFormat::Svg: return svg(map, keys);
    case RenderFormat::Pgm: return pgm(map, keys);
    case RenderFormat::Csv: return map_csv(map);
  }
  throw Error("unknown format");
}

void write_map(const RegionMap& map, const std::string& path, RenderFormat format, Mask keys) {
  const std::string body = render_map(map, format, keys);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out << body;
  if (!out) throw IoError("write failed for " + path);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace aa
