#pragma once

// Universality by graph connectivity. Vertices are standard basis indices;
// an edge {r, l} exists when some non-designated generator couples e_r and e_l.
// With a diagonal general direction present, every invariant subspace is a
// coordinate subspace, so the set is universal exactly when this graph is
// connected. When it is not, the components give the block-diagonal structure
// of the generated group after a basis permutation.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uqc/generators.hpp"

namespace uqc {

// Entries with magnitude above cutoff_for(X) count as couplings. In relative
// mode the cutoff is tau * max |X_ij|.
struct EdgeThreshold {
  double tau = kTauEdge;
  bool absolute = false;

  double cutoff_for(const ComplexMatrix& m) const { return absolute ? tau : tau * m.max_abs(); }
};

struct EdgeSource {
  std::size_t generator;
  double magnitude;
};

struct CouplingGraph {
  std::size_t dim = 0;
  // Key (r, l) with r < l, 0-based.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<EdgeSource>> edges;

  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::vector<std::size_t>> adjacency() const;
};

// Blocks of basis indices, 0-based; each block ascending, blocks ordered by
// their smallest member.
using Partition = std::vector<std::vector<std::size_t>>;

CouplingGraph build_coupling_graph(const GeneratorSet& set, const EdgeThreshold& threshold = {});

// Graph over arbitrary matrices, optionally skipping one index.
CouplingGraph build_coupling_graph(std::span<const ComplexMatrix> matrices, std::size_t dim,
                                   std::optional<std::size_t> skip, const EdgeThreshold& threshold);

Partition connected_components(const CouplingGraph& graph);

// Fixed-point expansion from a start index, reading generator entries directly:
// repeat { for l in I, j != designated, r: if |<e_r|X_j|e_l>| > cutoff add r } until I stops growing.
std::vector<std::size_t> reachable_set(const GeneratorSet& set, std::size_t start, const EdgeThreshold& threshold = {});

struct BlockPartition {
  Partition components;
  // permutation[p] = original index placed at position p.
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> block_sizes;
};

BlockPartition block_partition_from(Partition components);
BlockPartition block_partition(const GeneratorSet& set, const EdgeThreshold& threshold = {});

// (P X P^T)_{pq} = X_{perm[p], perm[q]}.
ComplexMatrix permute(const ComplexMatrix& m, std::span<const std::size_t> permutation);

// Largest off-block entry of P X_j P^T relative to each generator's cutoff;
// true iff every one is within the cutoff.
bool satisfies_block_certificate(const GeneratorSet& set, const BlockPartition& blocks,
                                 const EdgeThreshold& threshold = {});

enum class UniversalityStatus { Universal, Reducible, ConditionallyUniversal };

const char* to_string(UniversalityStatus status);

struct UniversalityVerdict {
  UniversalityStatus status = UniversalityStatus::Reducible;
  Partition components;
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> block_sizes;
  // Component of the start vertex (index 0) when reducible, else empty.
  std::vector<std::size_t> witness_subspace;
  // Absent when the check was skipped.
  std::optional<SpectrumIndependenceVerdict> general_direction;
};

struct CheckOptions {
  EdgeThreshold edge;
  int relation_bound = kRelationBound;
  double tau_rel = kTauRel;
  bool check_general_direction = true;
};

UniversalityVerdict check_universality(const GeneratorSet& set, const CheckOptions& options = {});

}  // namespace uqc
