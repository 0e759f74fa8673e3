#include "uqc/document.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "uqc/error.hpp"

namespace uqc {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, where + ": " + what);
}

double read_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "not finite");
  return x;
}

double read_positive(const nlohmann::json& v, const std::string& where) {
  const double x = read_number(v, where);
  if (!(x > 0.0)) fail(where, "must be positive");
  return x;
}

ComplexMatrix read_matrix(const nlohmann::json& m, std::size_t d, const std::string& where) {
  if (!m.is_array()) fail(where, "matrix must be an array of rows");
  if (m.size() != d) {
    std::ostringstream os;
    os << "matrix has " << m.size() << " rows, expected " << d;
    fail(where, os.str());
  }
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    const auto& row = m[r];
    const std::string row_where = where + " row " + std::to_string(r + 1);
    if (!row.is_array()) fail(row_where, "row must be an array");
    if (row.size() != d) {
      std::ostringstream os;
      os << "has " << row.size() << " entries, expected " << d;
      fail(row_where, os.str());
    }
    for (std::size_t c = 0; c < d; ++c) {
      const auto& z = row[c];
      const std::string entry_where = where + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (!z.is_array() || z.size() != 2) fail(entry_where, "expected a [re, im] pair");
      out(r, c) = Complex(read_number(z[0], entry_where), read_number(z[1], entry_where));
    }
  }
  return out;
}

}  // namespace

InputDocument parse_input_document(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  InputDocument in;

  if (!doc.contains("algebra")) fail("algebra", "missing");
  const auto& alg = doc["algebra"];
  if (!alg.is_string()) fail("algebra", "expected \"u\" or \"su\"");
  const std::string kind = alg.get<std::string>();
  if (kind == "u") {
    in.set.algebra.kind = AlgebraKind::U;
  } else if (kind == "su") {
    in.set.algebra.kind = AlgebraKind::SU;
  } else {
    fail("algebra", "expected \"u\" or \"su\", got \"" + kind + "\"");
  }

  if (!doc.contains("dimension")) fail("dimension", "missing");
  const auto& dim = doc["dimension"];
  if (!dim.is_number_integer() || dim.get<long long>() < 1) fail("dimension", "expected a positive integer");
  const auto d = static_cast<std::size_t>(dim.get<long long>());
  in.set.algebra.dim = d;

  if (!doc.contains("generators") || !doc["generators"].is_array()) fail("generators", "expected an array");
  const auto& gens = doc["generators"];
  if (gens.empty()) fail("generators", "generator list is empty");
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& g = gens[j];
    std::string where = "generators[" + std::to_string(j + 1) + "]";
    if (!g.is_object()) fail(where, "expected an object with \"label\" and \"matrix\"");
    std::string label = "X" + std::to_string(j + 1);
    if (g.contains("label")) {
      if (!g["label"].is_string()) fail(where + ".label", "expected a string");
      label = g["label"].get<std::string>();
      where += " ('" + label + "')";
    }
    if (!g.contains("matrix")) fail(where, "missing \"matrix\"");
    in.set.generators.push_back(RawGenerator{label, read_matrix(g["matrix"], d, where)});
  }

  if (doc.contains("general_index")) {
    const auto& gi = doc["general_index"];
    if (!gi.is_number_integer()) fail("general_index", "expected a 1-based integer");
    const long long k = gi.get<long long>();
    if (k < 1 || static_cast<std::size_t>(k) > gens.size()) fail("general_index", "out of range");
    in.set.general_index = static_cast<std::size_t>(k - 1);
  }

  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) fail("tolerances", "expected an object");
    for (const auto& [key, value] : t.items()) {
      const std::string where = "tolerances." + key;
      if (key == "tau_edge") {
        in.tolerances.tau_edge = read_positive(value, where);
      } else if (key == "tau_rank") {
        in.tolerances.tau_rank = read_positive(value, where);
      } else if (key == "tau_rel") {
        in.tolerances.tau_rel = read_positive(value, where);
      } else if (key == "relation_bound") {
        if (!value.is_number_integer() || value.get<long long>() < 1) fail(where, "expected a positive integer");
        in.tolerances.relation_bound = static_cast<int>(value.get<long long>());
      } else {
        fail(where, "unknown tolerance");
      }
    }
  }
  return in;
}

InputDocument read_input_document(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": malformed JSON: " + e.what());
  }
  return parse_input_document(doc);
}

OrderedJson matrix_to_json(const ComplexMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson input_document_to_json(const GeneratorSet& set, const ToleranceOverrides& tolerances) {
  OrderedJson doc;
  doc["algebra"] = to_string(set.algebra.kind);
  doc["dimension"] = set.dim();
  doc["general_index"] = set.general_index + 1;
  OrderedJson gens = OrderedJson::array();
  for (const auto& g : set.generators) {
    OrderedJson entry;
    entry["label"] = g.label;
    entry["matrix"] = matrix_to_json(g.matrix.matrix());
    gens.push_back(std::move(entry));
  }
  doc["generators"] = std::move(gens);
  OrderedJson tol = OrderedJson::object();
  if (tolerances.tau_edge) tol["tau_edge"] = *tolerances.tau_edge;
  if (tolerances.tau_rank) tol["tau_rank"] = *tolerances.tau_rank;
  if (tolerances.tau_rel) tol["tau_rel"] = *tolerances.tau_rel;
  if (tolerances.relation_bound) tol["relation_bound"] = *tolerances.relation_bound;
  if (!tol.empty()) doc["tolerances"] = std::move(tol);
  return doc;
}

double tolerance_profile_edge(std::string_view profile) {
  if (profile == "strict") return 1e-13;
  if (profile == "default") return 1e-12;
  if (profile == "loose") return 1e-9;
  throw Error(ErrorKind::InvalidInput,
              "UQC_TOLERANCE_PROFILE must be strict, default or loose, got '" + std::string(profile) + "'");
}

OrderedJson indices_to_json(const std::vector<std::size_t>& v) {
  OrderedJson out = OrderedJson::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

OrderedJson partition_to_json(const Partition& p) {
  OrderedJson out = OrderedJson::array();
  for (const auto& block : p) out.push_back(indices_to_json(block));
  return out;
}

OrderedJson general_direction_to_json(const std::optional<SpectrumIndependenceVerdict>& v) {
  OrderedJson out;
  if (!v) {
    out["status"] = "skipped";
    return out;
  }
  out["status"] = to_string(v->status);
  if (v->degenerate) out["detail"] = "degenerate_spectrum";
  if (v->relation) out["relation"] = *v->relation;
  out["residual"] = v->residual;
  if (v->status != IndependenceStatus::ConstructedExact) {
    out["search_bound"] = v->search_bound;
    out["method"] = v->exhaustive ? "exhaustive" : "lattice_reduction";
  }
  return out;
}

OrderedJson verdict_to_json(const GeneratorSet& set, const UniversalityVerdict& verdict,
                            std::optional<double> epsilon_max) {
  OrderedJson out;
  out["status"] = to_string(verdict.status);
  out["algebra"] = to_string(set.algebra.kind);
  out["dimension"] = set.dim();
  out["components"] = partition_to_json(verdict.components);
  out["block_sizes"] = verdict.block_sizes;
  out["permutation"] = indices_to_json(verdict.permutation);
  if (verdict.status == UniversalityStatus::Reducible) out["witness_subspace"] = indices_to_json(verdict.witness_subspace);
  out["general_direction"] = general_direction_to_json(verdict.general_direction);
  if (epsilon_max) {
    out["epsilon_max"] = *epsilon_max;
  } else {
    out["epsilon_max"] = nullptr;
  }
  return out;
}

OrderedJson closure_to_json(const LieClosureReport& report, const Partition& closure_partition, bool include_basis) {
  OrderedJson out;
  out["dimension"] = report.dimension;
  out["target_dimension"] = report.target_dimension;
  if (report.traceless_in_u_mode) {
    out["traceless_in_u_mode"] = true;
    out["effective_target_dimension"] = report.effective_target();
  }
  out["full"] = report.full();
  out["rounds"] = report.rounds;
  out["residual_max"] = report.residual_max;
  out["partition"] = partition_to_json(closure_partition);
  if (include_basis) out["basis"] = report.basis;
  return out;
}

OrderedJson repair_to_json(const RepairPlan& plan) {
  OrderedJson out;
  out["no_op"] = plan.empty();
  OrderedJson bridges = OrderedJson::array();
  for (const auto& b : plan.bridges) {
    OrderedJson e;
    e["a"] = b.a + 1;
    e["b"] = b.b + 1;
    e["style"] = to_string(b.style);
    bridges.push_back(std::move(e));
  }
  out["bridges"] = std::move(bridges);
  OrderedJson added = OrderedJson::array();
  for (const auto& g : plan.added_generators) {
    OrderedJson e;
    e["label"] = g.label;
    e["matrix"] = matrix_to_json(g.matrix.matrix());
    added.push_back(std::move(e));
  }
  out["added_generators"] = std::move(added);
  return out;
}

}  // namespace uqc
