#pragma once

#include <string>

#include <json.hpp>

#include "freeaut/autom.hpp"
#include "freeaut/ge2.hpp"
#include "freeaut/metab.hpp"
#include "freeaut/natree.hpp"

namespace freeaut {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

Json step_to_json(const ElemStep& s);
ElemStep step_from_json(const Json& j, const Ctx& ctx);

Json certificate_to_json(const Certificate& cert);
Json witness_to_json(const StuckWitness& w);
StuckWitness witness_from_json(const Json& j, const Ctx& ctx);

Json verdict_to_json(const Verdict& v);
Json obstruction_to_json(const ObstructionReport& rep);

// Checks an emitted report by recomposing its certificates and re-checking
// its witnesses; never re-runs the decision procedure itself.
bool verify_report(const Json& report, std::string* why = nullptr);

} // namespace freeaut
