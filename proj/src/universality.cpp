#include "uqc/universality.hpp"

#include <algorithm>
#include <cmath>

#include "uqc/error.hpp"
#include "union_find.hpp"

namespace uqc {

const char* to_string(UniversalityStatus status) {
  switch (status) {
    case UniversalityStatus::Universal: return "universal";
    case UniversalityStatus::Reducible: return "reducible";
    case UniversalityStatus::ConditionallyUniversal: return "conditionally_universal";
  }
  return "unknown";
}

bool CouplingGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a == b) return false;
  return edges.contains({std::min(a, b), std::max(a, b)});
}

std::vector<std::vector<std::size_t>> CouplingGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(dim);
  for (const auto& [e, _] : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

CouplingGraph build_coupling_graph(std::span<const ComplexMatrix> matrices, std::size_t dim,
                                   std::optional<std::size_t> skip, const EdgeThreshold& threshold) {
  CouplingGraph g;
  g.dim = dim;
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    if (skip && *skip == j) continue;
    const auto& x = matrices[j];
    if (x.dim() != dim) throw Error(ErrorKind::InvalidInput, "matrix dimension differs from graph dimension", j);
    const double cutoff = threshold.cutoff_for(x);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t l = r + 1; l < dim; ++l) {
        const double mag = std::max(std::abs(x(r, l)), std::abs(x(l, r)));
        if (mag > cutoff) g.edges[{r, l}].push_back(EdgeSource{j, mag});
      }
    }
  }
  return g;
}

CouplingGraph build_coupling_graph(const GeneratorSet& set, const EdgeThreshold& threshold) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(set.generators.size());
  for (const auto& g : set.generators) mats.push_back(g.matrix.matrix());
  return build_coupling_graph(mats, set.dim(), set.general_index, threshold);
}

Partition connected_components(const CouplingGraph& graph) {
  detail::UnionFind uf(graph.dim);
  for (const auto& [e, _] : graph.edges) uf.unite(e.first, e.second);

  Partition out;
  std::vector<std::size_t> block_of_root(graph.dim, graph.dim);
  for (std::size_t v = 0; v < graph.dim; ++v) {
    const std::size_t root = uf.find(v);
    if (block_of_root[root] == graph.dim) {
      block_of_root[root] = out.size();
      out.emplace_back();
    }
    out[block_of_root[root]].push_back(v);
  }
  return out;
}

std::vector<std::size_t> reachable_set(const GeneratorSet& set, std::size_t start, const EdgeThreshold& threshold) {
  const std::size_t d = set.dim();
  if (start >= d) throw Error(ErrorKind::InvalidInput, "start index out of range");
  std::vector<double> cutoffs;
  for (const auto& g : set.generators) cutoffs.push_back(threshold.cutoff_for(g.matrix.matrix()));

  std::vector<bool> in(d, false);
  in[start] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t l = 0; l < d; ++l) {
      if (!in[l]) continue;
      for (std::size_t j = 0; j < set.generators.size(); ++j) {
        if (j == set.general_index) continue;
        const auto& x = set.generators[j].matrix.matrix();
        for (std::size_t r = 0; r < d; ++r) {
          if (!in[r] && std::abs(x(r, l)) > cutoffs[j]) {
            in[r] = true;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

BlockPartition block_partition_from(Partition components) {
  BlockPartition b;
  for (const auto& block : components) {
    b.block_sizes.push_back(block.size());
    b.permutation.insert(b.permutation.end(), block.begin(), block.end());
  }
  b.components = std::move(components);
  return b;
}

BlockPartition block_partition(const GeneratorSet& set, const EdgeThreshold& threshold) {
  return block_partition_from(connected_components(build_coupling_graph(set, threshold)));
}

ComplexMatrix permute(const ComplexMatrix& m, std::span<const std::size_t> permutation) {
  const std::size_t d = m.dim();
  if (permutation.size() != d) throw Error(ErrorKind::InvalidInput, "permutation length differs from dimension");
  ComplexMatrix out(d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) out(p, q) = m(permutation[p], permutation[q]);
  return out;
}

bool satisfies_block_certificate(const GeneratorSet& set, const BlockPartition& blocks,
                                 const EdgeThreshold& threshold) {
  const std::size_t d = set.dim();
  std::vector<std::size_t> block_at(d);
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks.block_sizes.size(); ++b)
    for (std::size_t k = 0; k < blocks.block_sizes[b]; ++k) block_at[pos++] = b;
  if (pos != d) return false;

  for (const auto& g : set.generators) {
    const ComplexMatrix pm = permute(g.matrix.matrix(), blocks.permutation);
    const double cutoff = threshold.cutoff_for(g.matrix.matrix());
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        if (block_at[p] != block_at[q] && std::abs(pm(p, q)) > cutoff) return false;
  }
  return true;
}

UniversalityVerdict check_universality(const GeneratorSet& set, const CheckOptions& options) {
  UniversalityVerdict v;
  BlockPartition blocks = block_partition(set, options.edge);
  v.components = std::move(blocks.components);
  v.permutation = std::move(blocks.permutation);
  v.block_sizes = std::move(blocks.block_sizes);

  if (options.check_general_direction) {
    const auto& x1 = set.designated().matrix.matrix();
    if (is_constructed_general_direction(x1, set.algebra)) {
      v.general_direction = constructed_verdict();
    } else {
      v.general_direction =
          check_general_direction(phases_of(x1), set.algebra, options.relation_bound, options.tau_rel);
    }
  }

  if (v.components.size() > 1) {
    v.status = UniversalityStatus::Reducible;
    v.witness_subspace = v.components.front();  // block containing index 0
  } else if (v.general_direction && v.general_direction->status != IndependenceStatus::Dependent) {
    v.status = UniversalityStatus::Universal;
  } else {
    v.status = UniversalityStatus::ConditionallyUniversal;
  }
  return v;
}

}  // namespace uqc
