#include "uqc/repair.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uqc/error.hpp"
#include "union_find.hpp"

namespace uqc {

const char* to_string(BridgeStyle style) {
  return style == BridgeStyle::Antisymmetric ? "antisymmetric" : "symmetric_imaginary";
}

SkewHermitianMatrix bridge_matrix(std::size_t dim, std::size_t a, std::size_t b, BridgeStyle style) {
  if (a >= dim || b >= dim || a == b) throw Error(ErrorKind::InvalidInput, "bridge indices must be distinct and in range");
  ComplexMatrix m(dim);
  if (style == BridgeStyle::Antisymmetric) {
    m(a, b) = 1.0;
    m(b, a) = -1.0;
  } else {
    m(a, b) = Complex(0.0, 1.0);
    m(b, a) = Complex(0.0, 1.0);
  }
  return SkewHermitianMatrix(std::move(m));
}

RepairPlan repair(const GeneratorSet& set, const RepairOptions& options) {
  const std::size_t d = set.dim();
  RepairPlan plan;
  plan.resulting_set = set;

  detail::UnionFind uf(d);
  for (const auto& [e, _] : build_coupling_graph(set, options.edge).edges) uf.unite(e.first, e.second);

  while (uf.components() > 1) {
    const std::size_t root = uf.find(0);
    std::vector<std::size_t> inside;
    std::size_t b = d;
    for (std::size_t v = 0; v < d; ++v) {
      if (uf.find(v) == root) {
        inside.push_back(v);
      } else if (b == d) {
        b = v;
      }
    }
    const std::size_t a = options.selection == BridgeSelection::SmallestIndex ? inside.front() : inside.back();

    std::ostringstream label;
    label << (options.style == BridgeStyle::Antisymmetric ? "Y_" : "Ys_") << a + 1 << "_" << b + 1;
    Generator g{bridge_matrix(d, a, b, options.style), label.str()};
    plan.bridges.push_back(Bridge{a, b, options.style});
    plan.added_generators.push_back(g);
    plan.resulting_set.generators.push_back(std::move(g));
    uf.unite(a, b);
  }
  return plan;
}

namespace {

Generator chain(const Algebra& algebra, std::span<const double> c, BridgeStyle style) {
  const std::size_t d = algebra.dim;
  if (d == 0) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  if (c.size() + 1 != d) {
    std::ostringstream os;
    os << "chain needs " << d - 1 << " coefficients, got " << c.size();
    throw Error(ErrorKind::InvalidInput, os.str());
  }
  ComplexMatrix m(d);
  for (std::size_t j = 0; j + 1 < d; ++j) {
    if (c[j] == 0.0 || !std::isfinite(c[j])) {
      std::ostringstream os;
      os << "chain coefficient " << j + 1 << " must be nonzero and finite";
      throw Error(ErrorKind::InvalidInput, os.str());
    }
    if (style == BridgeStyle::Antisymmetric) {
      m(j, j + 1) = c[j];
      m(j + 1, j) = -c[j];
    } else {
      m(j, j + 1) = Complex(0.0, c[j]);
      m(j + 1, j) = Complex(0.0, c[j]);
    }
  }
  return Generator{SkewHermitianMatrix(std::move(m)), "X2"};
}

}  // namespace

Generator antisymmetric_chain(const Algebra& algebra, std::span<const double> coefficients) {
  return chain(algebra, coefficients, BridgeStyle::Antisymmetric);
}

Generator symmetric_chain(const Algebra& algebra, std::span<const double> coefficients) {
  return chain(algebra, coefficients, BridgeStyle::SymmetricImaginary);
}

GeneratorSet minimal_pair(const Algebra& algebra, std::optional<std::vector<double>> coefficients, BridgeStyle style) {
  if (algebra.dim == 0) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  GeneratorSet set;
  set.algebra = algebra;
  set.general_index = 0;
  set.generators.push_back(make_general_direction(algebra));
  if (algebra.dim == 1) {
    if (coefficients && !coefficients->empty()) throw Error(ErrorKind::InvalidInput, "d = 1 takes no chain coefficients");
    return set;
  }
  const std::vector<double> c = coefficients ? *coefficients : std::vector<double>(algebra.dim - 1, 1.0);
  set.generators.push_back(chain(algebra, c, style));
  return set;
}

}  // namespace uqc
