#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uqc/generators.hpp"
#include "uqc/universality.hpp"

namespace uqc {

// Y_ab = E_ab - E_ba, or i (E_ab + E_ba).
enum class BridgeStyle { Antisymmetric, SymmetricImaginary };

// How each bridge (a, b) is chosen, with I the component of index 0:
//   SmallestIndex: a = min I, b = min outside I.
//   LargestInside: a = max I, b = min outside I (reproduces the worked U(3) repair).
enum class BridgeSelection { SmallestIndex, LargestInside };

const char* to_string(BridgeStyle style);

struct Bridge {
  std::size_t a;  // 0-based
  std::size_t b;
  BridgeStyle style;
  friend bool operator==(const Bridge&, const Bridge&) = default;
};

struct RepairOptions {
  BridgeStyle style = BridgeStyle::Antisymmetric;
  BridgeSelection selection = BridgeSelection::SmallestIndex;
  EdgeThreshold edge;
};

struct RepairPlan {
  std::vector<Bridge> bridges;
  std::vector<Generator> added_generators;
  GeneratorSet resulting_set;

  // A connected input yields an empty plan and an unchanged set.
  bool empty() const noexcept { return bridges.empty(); }
};

SkewHermitianMatrix bridge_matrix(std::size_t dim, std::size_t a, std::size_t b, BridgeStyle style);

// Adds one bridge per missing connection until the coupling graph is connected.
RepairPlan repair(const GeneratorSet& set, const RepairOptions& options = {});

// sum_j c_j (E_{j,j+1} - E_{j+1,j}). Throws InvalidInput unless c has d-1
// nonzero finite entries.
Generator antisymmetric_chain(const Algebra& algebra, std::span<const double> coefficients);
// i sum_j c_j (E_{j,j+1} + E_{j+1,j}).
Generator symmetric_chain(const Algebra& algebra, std::span<const double> coefficients);

// {make_general_direction(algebra), chain}; the chain's coupling graph is the
// path 1-2-...-d. Coefficients default to all ones. For d = 1 the set holds
// only the diagonal generator.
GeneratorSet minimal_pair(const Algebra& algebra, std::optional<std::vector<double>> coefficients = std::nullopt,
                          BridgeStyle style = BridgeStyle::Antisymmetric);

}  // namespace uqc
