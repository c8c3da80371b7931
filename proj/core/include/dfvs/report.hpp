#pragma once

#include <optional>
#include <string>

#include "dfvs/crux.hpp"
#include "dfvs/scaling.hpp"
#include "dfvs/separators.hpp"
#include "dfvs/solver.hpp"
#include "dfvs/structure.hpp"
#include "dfvs/tight_sequence.hpp"

namespace dfvs {

// Machine-readable dumps (schema 1, see docs/formats.md). Vertex ids are 0-based.
std::string solution_json(const std::optional<Solution>& solution, int k, double seconds,
                           bool with_trace = true);
std::string chain_json(const SeparatorChain& chain);
// Each boundary carries its classification against `family`.
std::string sequence_json(const StructureInstance& q, const TightSeparatorSequence& seq,
                          const StructureFamily& family);
std::string crux_json(const CruxOutcome& out, int p);
std::string scaling_json(const ScalingReport& report);

}  // namespace dfvs
