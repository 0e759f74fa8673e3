// uqc: qudit gate-set universality from the coupling graph of the generators.
//
//   uqc check     <input.json> [--oracle] [--tau-edge X] [--json|--text]
//   uqc repair    <input.json> [--style antisym|sym] [--selection smallest|largest-inside] [--out path]
//   uqc construct --dim d [--algebra u|su] [--style antisym|sym] [--coefficients c...] [--out path]
//   uqc epsilon   <input.json>
//   uqc oracle    <input.json> [--basis]
//
// Exit codes: 0 analysis completed (whatever the verdict), 2 input or
// validation error, 3 numerical failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uqc/document.hpp"
#include "uqc/error.hpp"
#include "uqc/generators.hpp"
#include "uqc/oracle.hpp"
#include "uqc/repair.hpp"
#include "uqc/universality.hpp"

namespace {

using uqc::OrderedJson;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct SharedFlags {
  std::string input;
  std::optional<double> tau_edge;
  bool absolute_edge = false;
  bool allow_degenerate = false;
  bool text = false;
};

double resolve_tau_edge(const SharedFlags& flags, const uqc::InputDocument& doc) {
  if (flags.tau_edge) return *flags.tau_edge;
  if (doc.tolerances.tau_edge) return *doc.tolerances.tau_edge;
  if (const char* profile = std::getenv("UQC_TOLERANCE_PROFILE")) return uqc::tolerance_profile_edge(profile);
  return uqc::kTauEdge;
}

uqc::CheckOptions check_options(const SharedFlags& flags, const uqc::InputDocument& doc) {
  uqc::CheckOptions opt;
  opt.edge.tau = resolve_tau_edge(flags, doc);
  opt.edge.absolute = flags.absolute_edge;
  if (doc.tolerances.relation_bound) opt.relation_bound = *doc.tolerances.relation_bound;
  if (doc.tolerances.tau_rel) opt.tau_rel = *doc.tolerances.tau_rel;
  return opt;
}

uqc::GeneratorSet load(const SharedFlags& flags, uqc::InputDocument& doc, bool require_general_direction = true) {
  doc = uqc::read_input_document(flags.input);
  uqc::ValidationOptions v;
  v.allow_degenerate = flags.allow_degenerate;
  v.require_general_direction = require_general_direction;
  return uqc::validate_set(doc.set, v);
}

std::optional<double> try_epsilon(const uqc::GeneratorSet& set) {
  try {
    return uqc::epsilon_bound(set);
  } catch (const uqc::Error& e) {
    if (e.kind() == uqc::ErrorKind::InvalidInput) return std::nullopt;
    throw;
  }
}

void write_json(const std::string& path, const OrderedJson& doc) {
  std::ofstream f(path);
  if (!f) throw uqc::Error(uqc::ErrorKind::InvalidInput, "cannot write " + path);
  f << doc.dump(2) << '\n';
  if (!f) throw uqc::Error(uqc::ErrorKind::InvalidInput, "failed writing " + path);
}

std::string braces(const std::vector<std::size_t>& block) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << block[i] + 1;
  os << '}';
  return os.str();
}

void render_text(std::ostream& os, const uqc::GeneratorSet& set, const uqc::UniversalityVerdict& v,
                 const uqc::CouplingGraph& graph, const OrderedJson& doc) {
  os << "status: " << uqc::to_string(v.status) << '\n';
  os << "algebra: " << uqc::to_string(set.algebra.kind) << '(' << set.dim() << ")\n";
  os << "components:";
  for (const auto& b : v.components) os << ' ' << braces(b);
  os << "\nblock sizes:";
  for (auto s : v.block_sizes) os << ' ' << s;
  os << "\npermutation:";
  for (auto p : v.permutation) os << ' ' << p + 1;
  os << '\n';
  if (!v.witness_subspace.empty()) os << "witness subspace: " << braces(v.witness_subspace) << '\n';
  os << "general direction: " << doc["general_direction"]["status"].get<std::string>();
  if (v.general_direction && v.general_direction->relation) {
    os << " (relation";
    for (auto c : *v.general_direction->relation) os << ' ' << c;
    os << ')';
  }
  os << '\n';
  if (doc["epsilon_max"].is_number()) os << "epsilon_max: " << doc["epsilon_max"].get<double>() << '\n';
  os << "coupling graph:\n";
  const auto adj = graph.adjacency();
  for (std::size_t r = 0; r < adj.size(); ++r) {
    os << "  " << r + 1 << " |";
    for (auto n : adj[r]) os << ' ' << n + 1;
    os << '\n';
  }
  if (doc.contains("oracle")) {
    const auto& o = doc["oracle"];
    os << "oracle: dimension " << o["dimension"].get<std::size_t>() << " of " << o["target_dimension"].get<std::size_t>()
       << (o["agrees"].get<bool>() ? ", agrees" : ", DISAGREES") << '\n';
  }
  if (doc.contains("repair")) {
    const auto& r = doc["repair"];
    os << "repair:";
    if (r["bridges"].empty()) os << " none needed";
    for (const auto& b : r["bridges"]) os << " (" << b["a"].get<std::size_t>() << ',' << b["b"].get<std::size_t>() << ')';
    os << '\n';
  }
}

void emit(const SharedFlags& flags, const uqc::GeneratorSet& set, const uqc::UniversalityVerdict& v,
          const uqc::CheckOptions& opt, const OrderedJson& doc) {
  if (flags.text) {
    render_text(std::cout, set, v, uqc::build_coupling_graph(set, opt.edge), doc);
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

int cmd_check(const SharedFlags& flags, bool with_oracle) {
  uqc::InputDocument doc;
  const auto set = load(flags, doc);
  const auto opt = check_options(flags, doc);
  const auto verdict = uqc::check_universality(set, opt);
  OrderedJson out = uqc::verdict_to_json(set, verdict, try_epsilon(set));
  if (with_oracle) {
    uqc::ClosureOptions copt;
    if (doc.tolerances.tau_rank) copt.tau_rank = *doc.tolerances.tau_rank;
    const auto report = uqc::lie_closure(set, copt);
    const auto partition = uqc::closure_block_partition(report, opt.edge);
    OrderedJson o = uqc::closure_to_json(report, partition);
    o["agrees"] = uqc::oracle_agrees(verdict, report, partition);
    out["oracle"] = std::move(o);
  }
  emit(flags, set, verdict, opt, out);
  return kExitOk;
}

uqc::BridgeStyle parse_style(const std::string& s) {
  return s == "sym" ? uqc::BridgeStyle::SymmetricImaginary : uqc::BridgeStyle::Antisymmetric;
}

int cmd_repair(const SharedFlags& flags, const std::string& style, const std::string& selection,
               const std::string& out_path) {
  uqc::InputDocument doc;
  const auto set = load(flags, doc);
  const auto opt = check_options(flags, doc);
  uqc::RepairOptions ropt;
  ropt.style = parse_style(style);
  ropt.selection = selection == "largest-inside" ? uqc::BridgeSelection::LargestInside
                                                : uqc::BridgeSelection::SmallestIndex;
  ropt.edge = opt.edge;
  const auto plan = uqc::repair(set, ropt);
  const auto verdict = uqc::check_universality(plan.resulting_set, opt);
  OrderedJson out = uqc::verdict_to_json(plan.resulting_set, verdict, try_epsilon(plan.resulting_set));
  out["repair"] = uqc::repair_to_json(plan);
  if (!out_path.empty()) {
    write_json(out_path, uqc::input_document_to_json(plan.resulting_set, doc.tolerances));
    out["repair"]["written"] = out_path;
  }
  emit(flags, plan.resulting_set, verdict, opt, out);
  return kExitOk;
}

int cmd_construct(long long dim, const std::string& algebra, const std::string& style,
                  const std::vector<double>& coefficients, const std::string& out_path) {
  if (dim < 1) throw uqc::Error(uqc::ErrorKind::InvalidInput, "--dim must be a positive integer");
  uqc::Algebra alg{algebra == "su" ? uqc::AlgebraKind::SU : uqc::AlgebraKind::U, static_cast<std::size_t>(dim)};
  std::optional<std::vector<double>> c;
  if (!coefficients.empty()) c = coefficients;
  const auto set = uqc::minimal_pair(alg, c, parse_style(style));
  const OrderedJson doc = uqc::input_document_to_json(set);
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_json(out_path, doc);
    OrderedJson summary;
    summary["written"] = out_path;
    summary["algebra"] = algebra;
    summary["dimension"] = dim;
    summary["generators"] = set.generators.size();
    std::cout << summary.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_epsilon(const SharedFlags& flags) {
  uqc::InputDocument doc;
  const auto set = load(flags, doc, /*require_general_direction=*/false);
  const auto per = uqc::epsilon_bounds(set);
  const double eps = uqc::epsilon_bound(set);
  const double step = 0.99 * eps;
  const double sqrt2 = std::numbers::sqrt2;

  OrderedJson out;
  OrderedJson gens = OrderedJson::array();
  bool all_ok = true;
  for (std::size_t j = 0; j < set.generators.size(); ++j) {
    const auto& g = set.generators[j];
    OrderedJson e;
    e["label"] = g.label;
    e["operator_norm"] = uqc::operator_norm(g.matrix.matrix());
    if (std::isfinite(per[j])) {
      e["epsilon_max"] = per[j];
    } else {
      e["epsilon_max"] = nullptr;
    }
    const auto u = uqc::matrix_exp(g.matrix, step);
    const double dist = uqc::operator_norm(u - uqc::ComplexMatrix::identity(set.dim()));
    e["distance_at_0_99_epsilon"] = dist;
    e["below_sqrt2"] = dist < sqrt2;
    all_ok = all_ok && dist < sqrt2;
    gens.push_back(std::move(e));
  }
  out["generators"] = std::move(gens);
  out["epsilon_max"] = eps;
  out["test_step"] = step;
  out["sqrt2"] = sqrt2;
  out["all_verified"] = all_ok;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_oracle(const SharedFlags& flags, bool with_basis) {
  uqc::InputDocument doc;
  const auto set = load(flags, doc);
  const auto opt = check_options(flags, doc);
  uqc::ClosureOptions copt;
  if (doc.tolerances.tau_rank) copt.tau_rank = *doc.tolerances.tau_rank;
  const auto report = uqc::lie_closure(set, copt);
  std::cout << uqc::closure_to_json(report, uqc::closure_block_partition(report, opt.edge), with_basis).dump(2) << '\n';
  return kExitOk;
}

void add_shared(CLI::App* cmd, SharedFlags& flags, bool output_format) {
  cmd->add_option("input", flags.input, "Generator-set JSON document")->required();
  cmd->add_option("--tau-edge", flags.tau_edge, "Coupling cutoff (overrides document and UQC_TOLERANCE_PROFILE)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--absolute-edge", flags.absolute_edge, "Treat --tau-edge as an absolute magnitude");
  cmd->add_flag("--allow-degenerate", flags.allow_degenerate,
                "Accept a repeated eigenphase in the designated generator");
  if (output_format) {
    auto* json = cmd->add_flag("--json", "JSON output (default)");
    auto* text = cmd->add_flag("--text", flags.text, "Human-readable output");
    json->excludes(text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide, repair and construct universal qudit generator sets"};
  app.set_version_flag("--version", std::string("uqc ") + UQC_VERSION);
  app.require_subcommand(1);

  SharedFlags flags;
  bool with_oracle = false;
  bool with_basis = false;
  std::string style = "antisym";
  std::string selection = "smallest";
  std::string out_path;
  long long dim = 0;
  std::string algebra = "u";
  std::vector<double> coefficients;

  auto* check = app.add_subcommand("check", "Decide universality from the coupling graph");
  add_shared(check, flags, true);
  check->add_flag("--oracle", with_oracle, "Cross-check against the brute-force Lie closure");

  auto* rep = app.add_subcommand("repair", "Add bridging generators until the set is universal");
  add_shared(rep, flags, true);
  rep->add_option("--style", style, "Bridge form")->check(CLI::IsMember({"antisym", "sym"}));
  rep->add_option("--selection", selection, "Bridge endpoint rule")->check(CLI::IsMember({"smallest", "largest-inside"}));
  rep->add_option("--out", out_path, "Write the repaired input document here");

  auto* cons = app.add_subcommand("construct", "Write a minimal two-generator universal set");
  cons->add_option("--dim", dim, "Qudit dimension d")->required();
  cons->add_option("--algebra", algebra, "u or su")->check(CLI::IsMember({"u", "su"}));
  cons->add_option("--style", style, "Chain form")->check(CLI::IsMember({"antisym", "sym"}));
  cons->add_option("--coefficients", coefficients, "d-1 nonzero chain coefficients (default all 1)");
  cons->add_option("--out", out_path, "Output path (stdout if omitted)");

  auto* eps = app.add_subcommand("epsilon", "Small-step bound and its numerical verification");
  add_shared(eps, flags, false);

  auto* orc = app.add_subcommand("oracle", "Lie-closure report only");
  add_shared(orc, flags, false);
  orc->add_flag("--basis", with_basis, "Include the orthonormal closure basis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitInput;
  }

  try {
    if (*check) return cmd_check(flags, with_oracle);
    if (*rep) return cmd_repair(flags, style, selection, out_path);
    if (*cons) return cmd_construct(dim, algebra, style, coefficients, out_path);
    if (*eps) return cmd_epsilon(flags);
    if (*orc) return cmd_oracle(flags, with_basis);
  } catch (const uqc::Error& e) {
    std::cerr << "uqc: " << uqc::to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "uqc: internal error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}
