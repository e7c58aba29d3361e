// slicekit — exact combinatorial invariants of generalized transversal
// slices and convolution diagrams in affine Grassmannians, on the command
// line. All output is deterministic; repeated runs are byte-identical.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slicekit/appendix_checks.hpp"
#include "slicekit/convolution.hpp"
#include "slicekit/errors.hpp"
#include "slicekit/parallel.hpp"
#include "slicekit/slices.hpp"

using namespace slicekit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "plain";
  unsigned jobs = 1;
  unsigned long long seed = 0;  // reserved for randomized property tooling
};

RenderFormat render_format(const GlobalOptions& g) {
  if (g.format == "plain") return RenderFormat::plain;
  if (g.format == "json") return RenderFormat::json;
  if (g.format == "latex") return RenderFormat::latex;
  throw descriptor_error("unknown format '" + g.format + "'");
}

json coweight_json(const Coweight& w) { return json(w.coords); }

json char_json(const RootDatum& datum, const EquivariantCharacter& ch) {
  return json::parse(render(datum, ch, RenderFormat::json));
}

json qpoly_json(const QPolynomial& p) { return json::parse(render(p, RenderFormat::json)); }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_root_system(const GlobalOptions& g, const std::string& group) {
  auto datum = RootDatum::build(group);
  RepOracle oracle(datum);
  auto census = oracle.minuscule_fundamental_coweights();
  RenderFormat fmt = render_format(g);
  if (fmt == RenderFormat::json) {
    json doc;
    doc["group"] = datum.label();
    doc["rank"] = datum.rank();
    doc["ss_rank"] = datum.ss_rank();
    doc["cartan"] = datum.cartan();
    json roots = json::array(), coroots = json::array();
    for (const auto& r : datum.positive_roots()) roots.push_back(r.coords);
    for (const auto& c : datum.positive_coroots()) coroots.push_back(c.coords);
    doc["positive_roots"] = roots;
    doc["positive_coroots"] = coroots;
    doc["two_rho_check"] = datum.two_rho_check().coords;
    doc["two_rho"] = datum.two_rho().coords;
    json mins = json::array();
    for (const auto& w : census) {
      json entry;
      entry["coweight"] = coweight_json(w);
      entry["orbit_size"] = datum.weyl_orbit(w).size();
      entry["dimension"] = oracle.weyl_dimension(w);
      mins.push_back(entry);
    }
    doc["minuscule_fundamental_coweights"] = mins;
    emit(doc);
    return kExitOk;
  }
  std::cout << "group " << datum.label() << "  rank " << datum.rank() << "  semisimple rank "
            << datum.ss_rank() << "\n";
  std::cout << "positive roots (" << datum.positive_roots().size() << "):\n";
  for (size_t k = 0; k < datum.positive_roots().size(); ++k)
    std::cout << "  " << datum.positive_roots()[k].str() << "   coroot "
              << datum.positive_coroots()[k].str() << "\n";
  std::cout << "2rho_check " << datum.two_rho_check().str() << "\n";
  std::cout << "2rho       " << datum.two_rho().str() << "\n";
  std::cout << "minuscule fundamental coweights: " << census.size() << "\n";
  for (const auto& w : census)
    std::cout << "  " << w.str() << "  orbit " << datum.weyl_orbit(w).size() << "  dim "
              << oracle.weyl_dimension(w) << "\n";
  return kExitOk;
}

int cmd_slice(const GlobalOptions& g, const std::string& group, const std::string& lambda_text,
              const std::string& mu_text) {
  auto datum = RootDatum::build(group);
  RepOracle oracle(datum);
  Coweight lambda = datum.parse_coweight(lambda_text);
  Coweight mu = datum.parse_coweight(mu_text);
  auto s = make_slice(datum, lambda, mu);

  long long dim = slice_dimension(datum, s);
  bool fixed = has_torus_fixed_point(oracle, s);
  bool cond = mu_condition(datum, mu);
  bool minuscule = oracle.is_minuscule(lambda);
  bool in_orbit = datum.dominant_representative(mu) == lambda;

  RenderFormat fmt = render_format(g);
  if (fmt == RenderFormat::json) {
    json doc;
    doc["group"] = datum.label();
    doc["lambda"] = coweight_json(lambda);
    doc["mu"] = coweight_json(mu);
    doc["dimension"] = dim;
    doc["repellent_dimension"] = repellent_dimension(datum, s);
    doc["has_torus_fixed_point"] = fixed;
    doc["mu_condition"] = cond;
    if (cond) {
      auto f = fibration_decomposition(datum, s);
      json fib;
      fib["base_lambda"] = coweight_json(f.base_lambda);
      fib["base_mu_plus"] = coweight_json(f.base_mu_plus);
      fib["affine_dim"] = f.affine_dim;
      fib["slice_is_affine_space"] = f.slice_is_affine_space;
      doc["fibration"] = fib;
    } else {
      doc["fibration"] = nullptr;
    }
    if (minuscule && in_orbit)
      doc["minuscule_character"] = char_json(datum, minuscule_slice_character(oracle, s));
    else
      doc["minuscule_character"] = nullptr;
    emit(doc);
    return kExitOk;
  }
  std::cout << "slice " << group << " lambda " << lambda.str() << " mu " << mu.str() << "\n";
  std::cout << "dimension " << dim << "  repellent dimension " << repellent_dimension(datum, s)
            << "\n";
  std::cout << "torus fixed point: " << (fixed ? "yes" : "no") << "\n";
  std::cout << "mu condition: " << (cond ? "holds" : "fails") << "\n";
  if (cond) {
    auto f = fibration_decomposition(datum, s);
    std::cout << "fibration: base mu+ " << f.base_mu_plus.str() << ", affine factor dim "
              << f.affine_dim << (f.slice_is_affine_space ? " (slice is an affine space)" : "")
              << "\n";
  } else {
    std::cout << "fibration: refused (mu condition fails)\n";
  }
  if (minuscule && in_orbit)
    std::cout << "character: " << render(datum, minuscule_slice_character(oracle, s), fmt)
              << "\n";
  return kExitOk;
}

struct ConvolutionArgs {
  std::string group;
  std::string lambdas_text;
  std::string mu_text;
};

ConvolutionDatum parse_convolution(const RootDatum& datum, const ConvolutionArgs& args) {
  auto lambdas = datum.parse_coweight_list(args.lambdas_text);
  Coweight mu = datum.parse_coweight(args.mu_text);
  return make_convolution(datum, std::move(lambdas), mu);
}

int cmd_fixed_points(const GlobalOptions& g, const ConvolutionArgs& args) {
  auto datum = RootDatum::build(args.group);
  RepOracle oracle(datum);
  auto c = parse_convolution(datum, args);
  auto fps = fixed_points(oracle, c);
  if (render_format(g) == RenderFormat::json) {
    json doc;
    doc["group"] = datum.label();
    json lambdas = json::array();
    for (const auto& la : c.lambdas) lambdas.push_back(coweight_json(la));
    doc["lambdas"] = lambdas;
    doc["mu"] = coweight_json(c.mu);
    doc["count"] = fps.size();
    json tuples = json::array();
    for (const auto& t : fps) {
      json tuple = json::array();
      for (const auto& m : t.mus) tuple.push_back(coweight_json(m));
      tuples.push_back(tuple);
    }
    doc["tuples"] = tuples;
    emit(doc);
    return kExitOk;
  }
  std::cout << fps.size() << " fixed point(s)\n";
  for (size_t i = 0; i < fps.size(); ++i) {
    std::cout << "#" << i << ":";
    for (const auto& m : fps[i].mus) std::cout << " " << m.str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_tangent(const GlobalOptions& g, const ConvolutionArgs& args, long long tuple_index) {
  auto datum = RootDatum::build(args.group);
  RepOracle oracle(datum);
  auto c = parse_convolution(datum, args);
  auto fps = fixed_points(oracle, c);
  if (tuple_index >= 0 && tuple_index >= static_cast<long long>(fps.size()))
    throw descriptor_error("--tuple index " + std::to_string(tuple_index) + " out of range (" +
                           std::to_string(fps.size()) + " fixed points)");
  RenderFormat fmt = render_format(g);
  json doc_tuples = json::array();
  for (size_t i = 0; i < fps.size(); ++i) {
    if (tuple_index >= 0 && static_cast<long long>(i) != tuple_index) continue;
    auto ch = tangent_character(oracle, c, fps[i]);
    if (fmt == RenderFormat::json) {
      json entry;
      json tuple = json::array();
      for (const auto& m : fps[i].mus) tuple.push_back(coweight_json(m));
      entry["tuple"] = tuple;
      entry["character"] = char_json(datum, ch);
      entry["total_dimension"] = ch.total_dimension();
      doc_tuples.push_back(entry);
    } else {
      std::cout << "#" << i << ":";
      for (const auto& m : fps[i].mus) std::cout << " " << m.str();
      std::cout << "\n  " << render(datum, ch, fmt) << "\n";
    }
  }
  if (fmt == RenderFormat::json) {
    json doc;
    doc["group"] = datum.label();
    doc["mu"] = coweight_json(c.mu);
    doc["tangent_characters"] = doc_tuples;
    emit(doc);
  }
  return kExitOk;
}

int cmd_poincare(const GlobalOptions& g, const ConvolutionArgs& args,
                 const std::string& closed_form) {
  auto datum = RootDatum::build(args.group);
  RepOracle oracle(datum);
  auto c = parse_convolution(datum, args);
  QPolynomial p;
  std::string method;
  if (closed_form.empty()) {
    p = poincare_polynomial(oracle, c);
    method = "direct";
  } else if (closed_form == "as-printed") {
    p = poincare_closed_form(oracle, c, -1);
    method = "closed-form-as-printed";
  } else if (closed_form == "offset0") {
    p = poincare_closed_form(oracle, c, 0);
    method = "closed-form-offset0";
  } else {
    throw descriptor_error("unknown --closed-form variant '" + closed_form + "'");
  }
  RenderFormat fmt = render_format(g);
  if (fmt == RenderFormat::json) {
    json doc;
    doc["group"] = datum.label();
    doc["mu"] = coweight_json(c.mu);
    doc["method"] = method;
    doc["polynomial"] = qpoly_json(p);
    emit(doc);
    return kExitOk;
  }
  std::cout << render(p, fmt) << "\n";
  return kExitOk;
}

int cmd_charts(const GlobalOptions& g, const ConvolutionArgs& args) {
  auto datum = RootDatum::build(args.group);
  RepOracle oracle(datum);
  auto c = parse_convolution(datum, args);
  auto charts = covering_charts(oracle, c);
  if (render_format(g) == RenderFormat::json) {
    json doc;
    doc["group"] = datum.label();
    doc["mu"] = coweight_json(c.mu);
    json list = json::array();
    for (const auto& chart : charts) {
      json entry;
      json tuple = json::array();
      for (const auto& m : chart.tuple.mus) tuple.push_back(coweight_json(m));
      entry["tuple"] = tuple;
      entry["chart_dims"] = chart.chart_dims;
      entry["total_dim"] = chart.total_dim;
      list.push_back(entry);
    }
    doc["charts"] = list;
    emit(doc);
    return kExitOk;
  }
  std::cout << charts.size() << " chart(s), each an open affine of dimension "
            << (charts.empty() ? 0 : charts.front().total_dim) << "\n";
  for (const auto& chart : charts) {
    std::cout << " ";
    for (const auto& m : chart.tuple.mus) std::cout << " " << m.str();
    std::cout << "  dims";
    for (long long d : chart.chart_dims) std::cout << " " << d;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_check(const GlobalOptions& g, const std::string& suite, const std::string& group,
              long long lambda_bound, long long box_radius) {
  auto datum = RootDatum::build(group);
  // rank-dependent defaults keep the full sweeps fast on rank 3-4 groups
  if (lambda_bound < 0) lambda_bound = datum.rank() <= 2 ? 4 : 3;
  if (box_radius < 0) box_radius = datum.rank() <= 2 ? 3 : 2;
  std::vector<SweepReport> reports;
  if (suite == "weight-rep" || suite == "all") {
    RepOracle oracle(datum);
    reports.push_back(sweep_weight_rep(oracle, lambda_bound, g.jobs));
  }
  if (suite == "pairing-orbit" || suite == "all") {
    reports.push_back(sweep_pairing_orbit_equiv(datum, box_radius, g.jobs));
  }
  if (reports.empty()) throw descriptor_error("unknown check suite '" + suite + "'");

  bool ok = true;
  if (render_format(g) == RenderFormat::json) {
    json doc = json::array();
    for (const auto& r : reports) {
      doc.push_back(json::parse(r.to_json()));
      ok = ok && r.ok();
    }
    emit(doc);
  } else {
    for (const auto& r : reports) {
      std::cout << r.suite << " " << r.group << " bound " << r.bound << ": " << r.cases_checked
                << " cases, " << r.counterexamples.size() << " counterexample(s)\n";
      for (const auto& cex : r.counterexamples) {
        std::cout << "  counterexample:";
        for (const auto& [k, v] : cex.values) std::cout << " " << k << "=" << v;
        std::cout << "\n";
      }
      ok = ok && r.ok();
    }
  }
  return ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slicekit: exact invariants of transversal slices and convolution diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: plain|json|latex")
      ->check(CLI::IsMember({"plain", "json", "latex"}));
  app.add_option("--jobs", global.jobs, "Worker count for sweeps (0 = hardware)");
  app.add_option("--seed", global.seed, "Reserved for randomized property tooling");

  std::string group, lambda_text, mu_text;
  ConvolutionArgs conv;
  long long tuple_index = -1;
  std::string closed_form;
  std::string suite;
  long long lambda_bound = -1, box_radius = -1;

  auto* root_system = app.add_subcommand("root-system", "Roots, coroots, minuscule census");
  root_system->add_option("group", group, "Group descriptor, e.g. GL3 or B2")->required();

  auto* slice = app.add_subcommand("slice", "Invariants of one generalized slice");
  slice->add_option("group", group)->required();
  slice->add_option("--lambda", lambda_text, "Dominant coweight")->required();
  slice->add_option("--mu", mu_text, "Coweight below lambda")->required();

  auto add_conv_options = [&](CLI::App* cmd) {
    cmd->add_option("group", conv.group)->required();
    cmd->add_option("--lambdas", conv.lambdas_text,
                    "Tuple of dominant coweights, e.g. 'w1;w1' or '1,0;0,1'")
        ->required();
    cmd->add_option("--mu", conv.mu_text)->required();
  };
  auto* fixed = app.add_subcommand("fixed-points", "Torus fixed points of a convolution diagram");
  add_conv_options(fixed);
  auto* tangent = app.add_subcommand("tangent", "Tangent characters at fixed points");
  add_conv_options(tangent);
  tangent->add_option("--tuple", tuple_index, "Only the k-th fixed point (canonical order)");
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of H_c");
  add_conv_options(poincare);
  poincare->add_option("--closed-form", closed_form,
                       "Use the closed-form count: as-printed|offset0 (default: direct)");
  auto* charts = app.add_subcommand("charts", "Open covering charts");
  add_conv_options(charts);

  auto* check = app.add_subcommand("check", "Exhaustive sweeps with counterexample reports");
  check->add_option("suite", suite, "weight-rep|pairing-orbit|all")->required();
  check->add_option("group", group)->required();
  check->add_option("--lambda-bound", lambda_bound,
                    "Fundamental-coefficient sum bound (default 4, or 3 for rank 3-4)");
  check->add_option("--box", box_radius,
                    "Coordinate box radius (default 3, or 2 for rank 3-4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (root_system->parsed()) return cmd_root_system(global, group);
    if (slice->parsed()) return cmd_slice(global, group, lambda_text, mu_text);
    if (fixed->parsed()) return cmd_fixed_points(global, conv);
    if (tangent->parsed()) return cmd_tangent(global, conv, tuple_index);
    if (poincare->parsed()) return cmd_poincare(global, conv, closed_form);
    if (charts->parsed()) return cmd_charts(global, conv);
    if (check->parsed()) return cmd_check(global, suite, group, lambda_bound, box_radius);
  } catch (const slice_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
