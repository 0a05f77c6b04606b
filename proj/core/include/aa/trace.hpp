#pragma once

#include <string>
#include <vector>

#include "aa/interval.hpp"

namespace aa {

enum class Relation { GE, GT, LE, LT, EQ };

std::string_view relation_symbol(Relation r);

/// One exactly decided inequality `lhs REL rhs`, with both operands kept so
/// the decision can be replayed.
struct TraceEntry {
  std::string name;
  Endpoint lhs;
  Endpoint rhs;
  Relation relation = Relation::GE;
  int sign = 0;  // sign of lhs - rhs
  std::string detail;

  bool holds() const;
};

using Trace = std::vector<TraceEntry>;

/// Decides `lhs REL rhs` exactly; rational operands are embedded when the
/// other side is a sqrt-sum.
TraceEntry decide(std::string name, Endpoint lhs, Endpoint rhs, Relation relation = Relation::GE,
                  std::string detail = {});

/// Recomputes the sign of lhs - rhs from the stored operands.
int reevaluate_sign(const TraceEntry& e);

bool all_hold(const Trace& trace);
const TraceEntry* first_failure(const Trace& trace);

void append(Trace& into, const Trace& from, const std::string& prefix = {});

}  // namespace aa
