#pragma once

// JSON documents exchanged by the command-line tool.
//
// Input:
//   { "algebra": "u" | "su", "dimension": d,
//     "generators": [ { "label": "X1", "matrix": [[[re, im], ...], ...] }, ... ],
//     "general_index": 1,                       // optional, 1-based
//     "tolerances": { "tau_edge": ..., "tau_rank": ..., "tau_rel": ...,
//                     "relation_bound": ... } } // optional
//
// All indices in documents are 1-based; the library is 0-based.

#include <filesystem>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "uqc/generators.hpp"
#include "uqc/oracle.hpp"
#include "uqc/repair.hpp"
#include "uqc/universality.hpp"

namespace uqc {

using OrderedJson = nlohmann::ordered_json;

struct ToleranceOverrides {
  std::optional<double> tau_edge;
  std::optional<double> tau_rank;
  std::optional<double> tau_rel;
  std::optional<int> relation_bound;
};

struct InputDocument {
  RawGeneratorSet set;
  ToleranceOverrides tolerances;
};

// Throws Error(InvalidInput) naming the offending field.
InputDocument parse_input_document(const nlohmann::json& doc);
InputDocument read_input_document(const std::filesystem::path& path);

OrderedJson matrix_to_json(const ComplexMatrix& m);
OrderedJson input_document_to_json(const GeneratorSet& set, const ToleranceOverrides& tolerances = {});

// UQC_TOLERANCE_PROFILE values: strict, default, loose -> 1e-13, 1e-12, 1e-9.
double tolerance_profile_edge(std::string_view profile);

OrderedJson general_direction_to_json(const std::optional<SpectrumIndependenceVerdict>& v);
OrderedJson verdict_to_json(const GeneratorSet& set, const UniversalityVerdict& verdict,
                            std::optional<double> epsilon_max);
OrderedJson closure_to_json(const LieClosureReport& report, const Partition& closure_partition,
                            bool include_basis = false);
OrderedJson repair_to_json(const RepairPlan& plan);

OrderedJson indices_to_json(const std::vector<std::size_t>& v);  // adds 1
OrderedJson partition_to_json(const Partition& p);

}  // namespace uqc
