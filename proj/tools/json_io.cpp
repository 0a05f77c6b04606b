#include "json_io.hpp"

namespace aa::cli {

namespace {

constexpr int kAdvisoryDigits = 12;

Json words(const WordSet& ws) {
  Json out = Json::array();
  for (const auto& w : ws.words()) out.push_back(w.str());
  return out;
}

}  // namespace

Json to_json(const Endpoint& e) {
  Json j;
  if (e.is_rational()) {
    j["rational"] = e.rational().str();
  } else {
    j["sqrtsum"] = Json::array({e.sqrt_sum().a().str(), e.sqrt_sum().b().str()});
  }
  j["decimal_advisory"] = e.decimal(kAdvisoryDigits);
  return j;
}

Json to_json(const Interval& iv) { return Json::array({to_json(iv.lo()), to_json(iv.hi())}); }

Json to_json(const IntervalUnion& u) {
  Json out = Json::array();
  for (const auto& part : u.parts()) out.push_back(to_json(part));
  return out;
}

Json to_json(const TraceEntry& e) {
  Json j;
  j["name"] = e.name;
  j["relation"] = std::string(relation_symbol(e.relation));
  j["lhs_minus_rhs_sign"] = e.sign;
  j["holds"] = e.holds();
  j["lhs"] = to_json(e.lhs);
  j["rhs"] = to_json(e.rhs);
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

Json to_json(const Trace& t) {
  Json out = Json::array();
  for (const auto& e : t) out.push_back(to_json(e));
  return out;
}

Json to_json(const Verdict& v) {
  Json j;
  j["claim"] = std::string(claim_name(v.claim));
  j["lambda"] = v.lambda.str();
  j["c"] = v.c.str();
  j["status"] = std::string(status_name(v.status));
  j["path"] = v.path;
  j["seed"] = to_json(v.seed);
  j["scaling"] = v.scaling ? to_json(*v.scaling) : Json();
  j["gap"] = v.gap ? to_json(*v.gap) : Json();
  j["note"] = v.note;
  Json closures = Json::array();
  for (const auto& c : v.closures) {
    Json cj;
    cj["label"] = c.label;
    cj["op"] = std::string(op_name(c.op));
    cj["first"] = words(c.first);
    cj["second"] = words(c.second);
    cj["image"] = to_json(c.image);
    closures.push_back(std::move(cj));
  }
  j["closures"] = std::move(closures);
  j["trace"] = to_json(v.trace);
  return j;
}

Json to_json(const DensityResult& d) {
  Json j;
  j["dense"] = d.dense;
  j["values"] = d.values;
  j["skipped_pairs"] = d.skipped_pairs;
  j["first_uncovered"] = d.first_uncovered ? Json(d.first_uncovered->str()) : Json();
  j["worst_gap"] = d.worst_gap ? to_json(*d.worst_gap) : Json();
  return j;
}

Json to_json(const CorollaryReport& r) {
  Json j;
  j["claim"] = "corollary";
  j["lambda"] = r.lambda.str();
  j["c"] = r.c.str();
  j["condition"] = to_json(r.condition);
  j["all_supported"] = r.all_supported;
  j["note"] = r.note;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json vj;
    vj["claim"] = std::string(claim_name(v.claim));
    vj["status"] = std::string(status_name(v.status));
    vj["path"] = v.path;
    vj["seed"] = to_json(v.seed);
    vj["gap"] = v.gap ? to_json(*v.gap) : Json();
    vj["note"] = v.note;
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  if (r.product) {
    Json pj;
    pj["status"] = r.product->supported() ? "supported" : "unsupported";
    pj["density_depth"] = r.product->density_depth;
    pj["eps"] = r.product->eps.str();
    pj["density"] = to_json(r.product->density);
    pj["stability_depth"] = r.product->stability_depth;
    pj["stability_ok"] = r.product->stability_ok;
    pj["stability_note"] = r.product->stability_note;
    j["product"] = std::move(pj);
  } else {
    j["product"] = Json();
  }
  return j;
}

Json to_json(const PointClass& pc) {
  Json j;
  j["lambda"] = pc.lambda.str();
  j["c"] = pc.c.str();
  Json preds;
  for (const auto& e : pc.evals) {
    Json pj;
    pj["holds"] = e.holds;
    pj["trace"] = to_json(e.trace);
    preds[std::string(predicate_name(e.predicate))] = std::move(pj);
  }
  j["predicates"] = std::move(preds);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace aa::cli
