#pragma once

#include <span>

#include "json.hpp"

#include "takeaway/closed_form.hpp"
#include "takeaway/enumerator.hpp"
#include "takeaway/grundy.hpp"
#include "takeaway/position.hpp"
#include "takeaway/structure.hpp"

namespace takeaway {

// Encoders that need display names take the position they refer to.

nlohmann::json move_to_json(const Position& p, const Move& m);

/// Accepts {"type":"vertex","name":"A"} or {"type":"edge","members":["A","B"]}.
/// Throws MalformedDocument for a bad shape and IllegalMove when the named
/// vertex or edge is not in `p`.
Move move_from_json(const Position& p, const nlohmann::json& doc);

nlohmann::json report_to_json(const Position& p, const StructureReport& r);
nlohmann::json lemmas_to_json(std::span<const LemmaCheck> checks);
nlohmann::json prediction_to_json(const Prediction& pr);
nlohmann::json grundy_to_json(const Position& p, const GrundyResult& g);
nlohmann::json record_to_json(const VerificationRecord& rec);

}  // namespace takeaway
