#include "aa/trace.hpp"

#include <algorithm>

namespace aa {

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::GE: return ">=";
    case Relation::GT: return ">";
    case Relation::LE: return "<=";
    case Relation::LT: return "<";
    case Relation::EQ: return "==";
  }
  return "?";
}

bool TraceEntry::holds() const {
  switch (relation) {
    case Relation::GE: return sign >= 0;
    case Relation::GT: return sign > 0;
    case Relation::LE: return sign <= 0;
    case Relation::LT: return sign < 0;
    case Relation::EQ: return sign == 0;
  }
  return false;
}

int reevaluate_sign(const TraceEntry& e) { return sign_of(compare_embedding(e.lhs, e.rhs)); }

TraceEntry decide(std::string name, Endpoint lhs, Endpoint rhs, Relation relation, std::string detail) {
  TraceEntry e;
  e.name = std::move(name);
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.relation = relation;
  e.detail = std::move(detail);
  e.sign = reevaluate_sign(e);
  return e;
}

bool all_hold(const Trace& trace) {
  return std::all_of(trace.begin(), trace.end(), [](const TraceEntry& e) { return e.holds(); });
}

const TraceEntry* first_failure(const Trace& trace) {
  auto it = std::find_if(trace.begin(), trace.end(), [](const TraceEntry& e) { return !e.holds(); });
  return it == trace.end() ? nullptr : &*it;
}

void append(Trace& into, const Trace& from, const std::string& prefix) {
  for (const auto& e : from) {
    into.push_back(e);
    if (!prefix.empty()) into.back().name = prefix + e.name;
  }
}

}  // namespace aa
