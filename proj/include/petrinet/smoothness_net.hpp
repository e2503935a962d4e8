#pragma once

#include <memory>

#include "petrinet/net.hpp"
#include "smoothness/chart.hpp"

namespace petrinet {

/// The chart-parallel smoothness net. Chart triples enter on place "i";
/// transition "t" classifies each one (0: dimensions agree, remove;
/// 1: codimension within the limit, run the embedded Jacobian "j";
/// 2: run the order-2 check "d"). A passing order-2 check descends via
/// "s", whose list output is unrolled one triple at a time by the
/// "e"/"x" pair back onto "i". Failures emit a false verdict on "o"
/// through "h_d"/"h_j", which triggers the engine's Heureka; a run that
/// quiesces with "o" empty is smooth (the engine emits the true verdict).
///
/// The codimension limit is recorded in the net metadata; task bodies
/// come from the matching registry in executor/smoothness_run.hpp.
NetDef build_smoothness_net(int codim_limit);

/// Opaque token helpers shared by the net's tasks and its callers.
Value chart_token(std::shared_ptr<const smoothness::ChartTriple> triple);
Value verdict_token(std::shared_ptr<const smoothness::Verdict> verdict);

std::shared_ptr<const smoothness::ChartTriple> chart_of(const Value& v);
std::shared_ptr<const smoothness::Verdict> verdict_of(const Value& v);

inline constexpr const char* kChartTag = "ChartTriple";
inline constexpr const char* kVerdictTag = "Verdict";

}  // namespace petrinet
