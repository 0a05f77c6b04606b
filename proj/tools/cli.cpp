#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "aa/error.hpp"
#include "json_io.hpp"

#ifndef AA_VERSION
#define AA_VERSION "0.0.0"
#endif

namespace aa::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Interval window_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--window expects a,b");
  const Rational lo = rational_arg("--window", text.substr(0, comma));
  const Rational hi = rational_arg("--window", text.substr(comma + 1));
  if (hi < lo) throw UsageError("--window needs a <= b");
  return Interval(lo, hi);
}

BinaryOp op_arg(const std::string& text) {
  try {
    return parse_op(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--op: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f << body;
  if (!f) throw IoError("write failed for " + path);
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

int default_threads() {
  if (const char* env = std::getenv("AA_THREADS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("AA_THREADS must be an integer");
    }
  }
  return 0;
}

struct ParamArgs {
  std::string lambda;
  std::string c;

  void add(CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "contraction ratio, P/Q or decimal")->required();
    cmd->add_option("--c", c, "middle map parameter, P/Q or decimal")->required();
  }

  ParamReport report() const { return validate_params(rational_arg("--lambda", lambda), rational_arg("--c", c)); }
};

struct GridArgs {
  unsigned nx = 0;
  unsigned ny = 0;
  std::string lmin = "0";
  std::string lmax = "1/2";
  std::string cmin = "0";
  std::string cmax = "1";

  void add(CLI::App* cmd) {
    cmd->add_option("--nx", nx, "lambda samples (>= 2)")->required();
    cmd->add_option("--ny", ny, "c samples (>= 2)")->required();
    cmd->add_option("--lmin", lmin, "smallest lambda")->capture_default_str();
    cmd->add_option("--lmax", lmax, "largest lambda")->capture_default_str();
    cmd->add_option("--cmin", cmin, "smallest c")->capture_default_str();
    cmd->add_option("--cmax", cmax, "largest c")->capture_default_str();
  }

  GridSpec spec() const {
    if (nx < 2 || ny < 2) throw UsageError("--nx and --ny must be at least 2");
    GridSpec g;
    g.lmin = rational_arg("--lmin", lmin);
    g.lmax = rational_arg("--lmax", lmax);
    g.cmin = rational_arg("--cmin", cmin);
    g.cmax = rational_arg("--cmax", cmax);
    if (g.lmax < g.lmin || g.cmax < g.cmin) throw UsageError("grid ranges must be increasing");
    g.nx = nx;
    g.ny = ny;
    return g;
  }
};

Json invalid_params_json(const ParamReport& rep) {
  Json j;
  j["valid"] = false;
  j["violations"] = rep.violations;
  return j;
}

Interval default_target(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::SqrtSum: return Interval(0, 2);
    case BinaryOp::Sub: return Interval(-1, 1);
    case BinaryOp::Mul: return Interval(0, 1);
    case BinaryOp::Div: break;
  }
  throw UsageError("--eps with --op div needs --window");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on the attractor of {lambda x, lambda x + c - lambda, lambda x + 1 - lambda}", "aa"};
  app.set_version_flag("--version", std::string("aa ") + AA_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<int> threads_opt;
  app.add_option("--threads", threads_opt, "worker threads for scans (default: all cores; env AA_THREADS)");

  // check-params
  ParamArgs cp;
  auto* check = app.add_subcommand("check-params", "validate parameters and classify them against every predicate");
  cp.add(check);

  // verify
  ParamArgs vp;
  std::string claim;
  std::string json_out;
  auto* verify_cmd = app.add_subcommand("verify", "certify one claim at a parameter point");
  verify_cmd->add_option("--claim", claim, "sum | sum-digit | diff | div | sqrtsum | corollary")
      ->required()
      ->check(CLI::IsMember({"sum", "sum-digit", "diff", "div", "sqrtsum", "corollary"}));
  vp.add(verify_cmd);
  verify_cmd->add_option("--json", json_out, "write the verdict JSON to this file");

  // scan
  GridArgs sg;
  std::string scan_out;
  std::string scan_format;
  int figure = 1;
  auto* scan = app.add_subcommand("scan", "classify an exact rational grid and render it");
  sg.add(scan);
  scan->add_option("--out", scan_out, "output file")->required();
  scan->add_option("--format", scan_format, "svg | pgm | csv (default: from --out extension)");
  scan->add_option("--figure", figure, "predicate set keying the colors (1-5)")->check(CLI::Range(1, 5));

  // implication
  GridArgs ig;
  std::string from;
  std::string to;
  std::string impl_out;
  auto* impl = app.add_subcommand("implication", "list grid points where FROM holds and TO fails");
  impl->add_option("--from", from, "predicate expression, e.g. P_fund&P_sqrt")->required();
  impl->add_option("--to", to, "predicate expression, e.g. P_blue|P_orange3")->required();
  ig.add(impl);
  impl->add_option("--out", impl_out, "write the counterexample CSV here instead of stdout");

  // oracle
  ParamArgs op_params;
  std::string oracle_op;
  unsigned oracle_depth = 10;
  std::string oracle_window;
  std::string oracle_eps;
  unsigned density_depth = 6;
  auto* oracle = app.add_subcommand("oracle", "outer cover, gaps and optional density check");
  oracle->add_option("--op", oracle_op, "add | sub | mul | div | sqrtsum")->required();
  op_params.add(oracle);
  oracle->add_option("--depth", oracle_depth, "level of the outer cover")->capture_default_str();
  oracle->add_option("--window", oracle_window, "clip to a,b");
  oracle->add_option("--eps", oracle_eps, "run the pairwise density check at this resolution");
  oracle->add_option("--density-depth", density_depth, "endpoint depth for --eps")->capture_default_str();

  // gap-search
  ParamArgs gp;
  std::string gap_op;
  unsigned gap_depth = 10;
  std::string gap_window;
  auto* gaps = app.add_subcommand("gap-search", "certified gaps of an operation image inside a window");
  gaps->add_option("--op", gap_op, "add | sub | mul | div | sqrtsum")->required();
  gp.add(gaps);
  gaps->add_option("--depth", gap_depth, "level of the outer cover")->capture_default_str();
  gaps->add_option("--window", gap_window, "a,b")->required();

  std::vector<const char*> argv{"aa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const int threads = threads_opt ? *threads_opt : default_threads();

    if (*check) {
      const ParamReport rep = cp.report();
      const Rational l = rational_arg("--lambda", cp.lambda);
      const Rational c = rational_arg("--c", cp.c);
      Json j;
      j["lambda"] = l.str();
      j["c"] = c.str();
      j["valid"] = rep.ok();
      j["violations"] = rep.violations;
      const PointClass pc = classify_point(l, c);
      j["predicates"] = to_json(pc)["predicates"];
      out << dump(j);
      return rep.ok() ? kOk : kInvalidParams;
    }

    if (*verify_cmd) {
      const ParamReport rep = vp.report();
      if (!rep.ok()) {
        err << dump(invalid_params_json(rep));
        return kInvalidParams;
      }
      Json j;
      int code;
      std::string summary;
      if (claim == "corollary") {
        const CorollaryReport r = corollary_report(*rep.params);
        j = to_json(r);
        code = r.all_supported ? kOk : kUncertified;
        summary = std::string("corollary ") + (r.all_supported ? "supported" : "not supported");
      } else {
        const Claim which = claim == "sum"         ? Claim::Sum
                            : claim == "sum-digit" ? Claim::SumDigit
                            : claim == "diff"      ? Claim::Diff
                            : claim == "div"       ? Claim::Div
                                                   : Claim::SqrtSum;
        const Verdict v = verify(which, *rep.params);
        j = to_json(v);
        code = v.certified() ? kOk : kUncertified;
        summary = std::string(claim_name(v.claim)) + " " + std::string(status_name(v.status)) +
                  (v.path.empty() ? "" : " (" + v.path + ")");
      }
      if (json_out.empty()) {
        out << dump(j);
      } else {
        write_file(json_out, dump(j));
        out << summary << "\n";
      }
      return code;
    }

    if (*scan) {
      const GridSpec spec = sg.spec();
      namespace fs = std::filesystem;
      std::string fmt = scan_format;
      if (fmt.empty()) {
        fmt = fs::path(scan_out).extension().string();
        if (!fmt.empty() && fmt.front() == '.') fmt.erase(0, 1);
        if (fmt.empty()) fmt = "svg";
      }
      RenderFormat format;
      try {
        format = parse_render_format(fmt);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--format: ") + e.what());
      }
      const RegionMap map = scan_grid(spec, threads);
      const Mask keys = figure_predicates(figure);
      Json files = Json::array();
      write_map(map, scan_out, format, keys);
      files.push_back(scan_out);
      const std::string csv = map_csv(map);
      if (format != RenderFormat::Csv) {
        const std::string twin = fs::path(scan_out).replace_extension(".csv").string();
        write_file(twin, csv);
        files.push_back(twin);
      }
      Json j;
      j["nx"] = spec.nx;
      j["ny"] = spec.ny;
      j["points"] = map.points.size();
      j["figure"] = figure;
      Json counts;
      for (std::size_t k = 0; k < kCsvPredicateCount; ++k) {
        counts[std::string(predicate_name(kAllPredicates[k]))] = map.count(kAllPredicates[k]);
      }
      j["counts"] = std::move(counts);
      j["csv_fnv1a"] = hex64(fnv1a(csv));
      j["files"] = std::move(files);
      out << dump(j);
      return kOk;
    }

    if (*impl) {
      PredicateExpr f;
      PredicateExpr t;
      try {
        f = PredicateExpr::parse(from);
        t = PredicateExpr::parse(to);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
      const ImplicationReport rep = check_implication(f, t, ig.spec(), threads);
      const std::string csv = rep.csv();
      if (impl_out.empty()) {
        out << csv;
      } else {
        write_file(impl_out, csv);
        Json j;
        j["from"] = rep.from;
        j["to"] = rep.to;
        j["points"] = rep.points;
        j["from_count"] = rep.from_count;
        j["counterexamples"] = rep.counterexamples.size();
        j["csv_fnv1a"] = hex64(fnv1a(csv));
        out << dump(j);
      }
      return rep.holds() ? kOk : kCounterexamples;
    }

    if (*oracle) {
      const BinaryOp op = op_arg(oracle_op);
      const ParamReport rep = op_params.report();
      if (!rep.ok()) {
        err << dump(invalid_params_json(rep));
        return kInvalidParams;
      }
      const Params& p = *rep.params;
      std::optional<Interval> window;
      if (!oracle_window.empty()) window = window_arg(oracle_window);
      const OuterCover oc = outer_cover(op, p, oracle_depth, window);
      Json j;
      j["op"] = std::string(op_name(op));
      j["lambda"] = p.lambda().str();
      j["c"] = p.c().str();
      j["depth"] = oracle_depth;
      j["window"] = window ? to_json(*window) : Json();
      j["cover"] = to_json(oc.cover);
      Json gap_list = Json::array();
      if (!oc.cover.empty()) {
        const Interval hull = window ? (image_kind(op) == EndpointKind::SqrtSum ? window->embedded() : *window)
                                     : Interval(oc.cover.min(), oc.cover.max());
        for (const auto& g : oc.cover.gaps_within(hull)) gap_list.push_back(to_json(g));
      }
      j["gaps"] = std::move(gap_list);
      j["restriction_note"] = oc.restriction_note;
      if (!oracle_eps.empty()) {
        const Rational eps = rational_arg("--eps", oracle_eps);
        if (eps.sign() <= 0) throw UsageError("--eps must be positive");
        const Interval target = window ? *window : default_target(op);
        const auto pts = enumerate_endpoints(p, density_depth);
        Json dj = to_json(pairwise_density(op, pts, target, eps));
        dj["depth"] = density_depth;
        dj["eps"] = eps.str();
        dj["target"] = to_json(target);
        j["density"] = std::move(dj);
      }
      out << dump(j);
      return kOk;
    }

    if (*gaps) {
      const BinaryOp op = op_arg(gap_op);
      const ParamReport rep = gp.report();
      if (!rep.ok()) {
        err << dump(invalid_params_json(rep));
        return kInvalidParams;
      }
      const Interval window = window_arg(gap_window);
      const GapReport g = gap_search(op, *rep.params, gap_depth, window);
      Json j;
      j["op"] = std::string(op_name(op));
      j["lambda"] = rep.params->lambda().str();
      j["c"] = rep.params->c().str();
      j["depth"] = gap_depth;
      j["window"] = to_json(window);
      Json list = Json::array();
      for (const auto& gap : g.gaps) list.push_back(to_json(gap));
      j["gaps"] = std::move(list);
      j["restriction_note"] = g.cover.restriction_note;
      out << dump(j);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "aa: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "aa: " << e.what() << "\n";
    return kUsage;
  } catch (const DepthLimit& e) {
    err << "aa: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParams& e) {
    err << "aa: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const IoError& e) {
    err << "aa: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "aa: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace aa::cli
