// genlab experiment runner: executes one library pipeline per subcommand and
// writes report.json (plus trace.csv when the run produces radial or index
// traces) into the output directory.
//
// Exit codes: 0 all results certified, 1 usage error, 2 any undetermined,
// flagged, or threshold-not-reached entry.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "genlab/blocks.hpp"
#include "genlab/lineability.hpp"
#include "genlab/report.hpp"
#include "genlab/sampling.hpp"
#include "genlab/spaceability.hpp"

namespace fs = std::filesystem;
using namespace genlab;

namespace {

struct Output {
  fs::path dir = ".";
  std::string append_log;

  void write(const ExperimentReport& report, const std::optional<std::string>& csv) const {
    fs::create_directories(dir);
    const std::string text = report.serialize();
    {
      std::ofstream os(dir / "report.json", std::ios::binary | std::ios::trunc);
      os << text;
    }
    if (csv) {
      std::ofstream os(dir / "trace.csv", std::ios::binary | std::ios::trunc);
      os << *csv;
    } else {
      std::cerr << "note: run produced no trace; trace.csv not written\n";
    }
    if (!append_log.empty()) {
      std::ofstream os(append_log, std::ios::binary | std::ios::app);
      os << report.to_json().dump() << "\n";
    }
  }
};

int verdict_code(const Verdict& v) { return is_undetermined(v) ? 2 : 0; }

ComplexSeq parse_sequence(const std::string& text) {
  if (text == "zero") return ComplexSeq::zero();
  if (text == "ones") return block_constant_embed(BlockConstants::uniform({1.0, 0.0}));
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto colon = s.find(':', start);
      if (colon == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, colon - start));
      start = colon + 1;
    }
    return parts;
  };
  const auto parts = split(text);
  if (parts.size() >= 2 && parts[0] == "powerlaw") {
    const double gamma = std::stod(parts[1]);
    const BlockId block = parts.size() >= 3 ? std::stoull(parts[2]) : 0;
    return block == 0 ? ComplexSeq::power_law(gamma) : ComplexSeq::power_law_on_block(gamma, block);
  }
  if (parts.size() == 2 && parts[0] == "unit") return ComplexSeq::unit(std::stoull(parts[1]));
  throw UsageError("cannot parse sequence '" + text +
                   "' (expected zero, ones, unit:<n>, powerlaw:<gamma>[:<block>])");
}

int run_witness(const std::string& ambient, const std::string& sub, const Output& out) {
  const WitnessRecord rec = chain_witness(parse_space(ambient), parse_space(sub));
  ExperimentReport report;
  report.command = "witness";
  report.parameters = {{"ambient", ambient}, {"sub", sub}};
  report.timestamp = current_timestamp();
  report.results.push_back(Json{{"kind", "witness"},
                                {"ambient", describe(rec.ambient)},
                                {"sub", describe(rec.subspace)},
                                {"description", rec.description},
                                {"verdict_in", to_json(rec.verdict_in)},
                                {"verdict_out", to_json(rec.verdict_out)}});
  out.write(report, std::nullopt);
  return std::max(verdict_code(rec.verdict_in), verdict_code(rec.verdict_out));
}

int run_membership(const std::string& seq_text, const std::string& space_text, const Output& out) {
  const ComplexSeq seq = parse_sequence(seq_text);
  const SpaceSpec space = parse_space(space_text);
  const Verdict v = membership(seq, space);
  ExperimentReport report;
  report.command = "membership";
  report.parameters = {{"seq", seq_text}, {"space", space_text}};
  report.timestamp = current_timestamp();
  report.results.push_back(to_json(v));
  out.write(report, std::nullopt);
  return verdict_code(v);
}

int run_lineability(double b, std::uint64_t count, int combos, std::uint64_t seed, double M,
                    Index truncation, const Output& out) {
  const LineableBasis basis = lineable_basis(b, count);
  ExperimentReport report;
  report.command = "lineability";
  report.parameters = {{"b", format_double(b)},          {"count", std::to_string(count)},
                       {"combos", std::to_string(combos)}, {"seed", std::to_string(seed)},
                       {"M", format_double(M)},          {"trunc", std::to_string(truncation)}};
  report.timestamp = current_timestamp();

  Json elements = Json::array();
  for (const LineableElement& el : basis.elements) {
    Json je{{"j", el.j}, {"support_bound", el.support_bound}, {"c", el.c},
            {"c_exponent", el.c_exponent}};
    // certified neighborhood bounds d_{p_k}(f_j - x_j, 0) < 1/j
    const auto V = NeighborhoodSpec::at_level(basis.ambient, static_cast<int>(el.j));
    Json bounds = Json::array();
    const ComplexSeq y = divergent_block_seq(b, el.j);
    const auto choice = scale_into(y, V);
    for (double bound : choice->certified_bounds) bounds.push_back(bound);
    je["certified_neighborhood_bounds"] = bounds;
    je["radius"] = V.radius;
    elements.push_back(je);
  }
  report.results.push_back(Json{{"kind", "lineable_basis"}, {"b", b}, {"elements", elements}});

  RationalSampler sampler(seed);
  int code = 0;
  Json escapes = Json::array();
  for (int i = 0; i < combos; ++i) {
    const auto lambda = sampler.vector_with_last_nonzero(count);
    const auto coeffs = to_complex(lambda);
    const ComboEscape esc = verify_lineable_combo(coeffs, basis, M);
    escapes.push_back(Json{{"combo", i},
                           {"scale", esc.scale},
                           {"skipped", esc.skipped},
                           {"point", to_json(esc.point)},
                           {"threshold", esc.threshold}});
  }
  report.results.push_back(Json{{"kind", "escapes"}, {"count", combos}, {"records", escapes}});

  // Index trace for the first element: direct partial b-sums along its block
  // against the certified lower bound.
  {
    const LineableElement& el = basis.elements.front();
    IndexTraceCsv trace;
    Json rows = Json::array();
    KahanSum psum;
    std::uint64_t k = 1;
    for (std::uint64_t step = 1; step <= 16384; ++step) {
      const Index n = index_of(el.j, step);
      const double m = std::abs(el.f.at(n));
      if (m > 0.0) psum.add(std::pow(m, b));
      if (step == k) {
        const std::uint64_t skip = IndexFamily::positions_at_or_below(el.j, el.support_bound);
        const double lower =
            step <= skip ? 0.0
                         : std::pow(el.c, b) * (std::log(static_cast<double>(step) + 1.0) -
                                                std::log(static_cast<double>(skip) + 1.0));
        trace.rows.push_back({step, psum.value(), lower});
        rows.push_back(Json{{"K", step}, {"partial_sum", psum.value()}, {"lower_bound", lower}});
        k *= 2;
      }
    }
    report.results.push_back(Json{{"kind", "index_trace"}, {"rows", rows}});
    out.write(report, to_csv(trace));
  }
  (void)truncation;
  return code;
}

int run_spaceability(const std::string& ambient_text, const std::string& target_text, double b,
                     std::uint64_t count, int combos, std::uint64_t seed, double M, std::uint64_t K,
                     const Output& out) {
  const SpaceSpec ambient = parse_space(ambient_text);
  SpaceableBasis basis = target_text == "c0" ? block_indicator_basis(count)
                                             : spaceable_basis(ambient, b, count);
  ExperimentReport report;
  report.command = "spaceability";
  report.parameters = {{"ambient", ambient_text}, {"target", target_text},
                       {"b", format_double(b)},   {"count", std::to_string(count)},
                       {"combos", std::to_string(combos)}, {"seed", std::to_string(seed)},
                       {"M", format_double(M)},   {"K", std::to_string(K)}};
  report.timestamp = current_timestamp();

  Json verdicts = Json::array();
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    verdicts.push_back(Json{{"block", i + 1},
                            {"in_ambient", to_json(basis.verdicts_in[i])},
                            {"out_target", to_json(basis.verdicts_out[i])}});
  }
  report.results.push_back(Json{{"kind", "spaceable_basis"}, {"verdicts", verdicts}});

  RationalSampler sampler(seed);
  Json combos_json = Json::array();
  int code = 0;
  for (int i = 0; i < combos; ++i) {
    const auto lambda = sampler.vector_with_last_nonzero(count);
    const ComplexSeq f = linear_combine(std::span<const RationalComplex>(lambda),
                                        std::span<const ComplexSeq>(basis.elements));
    const DecomposeReport dec = decompose(f, basis, K);
    bool recovered = dec.all_consistent;
    const auto recovered_coeffs = dec.coefficients();
    for (std::size_t j = 0; j < lambda.size() && recovered; ++j) {
      const auto* consistent = std::get_if<BlockConsistent>(&dec.blocks[j].result);
      recovered = consistent && consistent->c_exact && *consistent->c_exact == lambda[j];
    }
    const SpaceableEscape esc = verify_spaceable_combo(to_complex(lambda), basis, M);
    Json jc{{"combo", i}, {"recovered_exactly", recovered}, {"escape_block", esc.block},
            {"evidence", to_json(esc.evidence)}};
    if (esc.point) jc["point"] = to_json(*esc.point);
    combos_json.push_back(jc);
    if (!recovered) code = 2;
  }
  report.results.push_back(Json{{"kind", "decompose_escapes"}, {"records", combos_json}});
  out.write(report, std::nullopt);
  return code;
}

int run_hardy_growth(double gamma, double q, double omega, double coeff, std::string arc_text,
                     int t_min, int t_max, double tol, std::vector<double> thresholds,
                     int panel_budget, const Output& out) {
  const HardyFn f = HardyFn::singular(Complex{coeff, 0.0}, omega, gamma);
  Arc arc = Arc::full_circle();
  if (!arc_text.empty()) {
    const auto comma = arc_text.find(',');
    if (comma == std::string::npos) throw UsageError("--arc expects 'a,b'");
    arc = make_arc(std::stod(arc_text.substr(0, comma)), std::stod(arc_text.substr(comma + 1)));
  }
  if (thresholds.empty()) thresholds = {10.0, 100.0, 1000.0};
  const RadialSchedule schedule{t_min, t_max};
  QuadratureOptions opts;
  opts.panel_budget = panel_budget;
  const GrowthReport growth = localized_growth(f, arc, q, schedule, thresholds, tol, opts);

  ExperimentReport report;
  report.command = "hardy-growth";
  report.parameters = {{"gamma", format_double(gamma)}, {"q", format_double(q)},
                       {"omega", format_double(omega)}, {"coeff", format_double(coeff)},
                       {"arc", arc_text.empty() ? "full" : arc_text},
                       {"t_min", std::to_string(t_min)}, {"t_max", std::to_string(t_max)},
                       {"tol", format_double(tol)}};
  report.timestamp = current_timestamp();
  report.results.push_back(to_json(hardy_membership(f, q, arc)));
  report.results.push_back(to_json(growth));

  RadialTraceCsv csv{growth.trace};
  out.write(report, to_csv(csv));
  return growth.any_flagged ? 2 : 0;
}

int run_hardy_basis(double p, double q, std::uint64_t count, int combos, std::uint64_t seed,
                    double M, int t_max, double tol, const Output& out) {
  const DenseAvoidingBasis basis = dense_avoiding_basis(p, q, count, tol);
  ExperimentReport report;
  report.command = "hardy-basis";
  report.parameters = {{"p", format_double(p)},     {"q", format_double(q)},
                       {"n", std::to_string(count)}, {"combos", std::to_string(combos)},
                       {"seed", std::to_string(seed)}, {"M", format_double(M)},
                       {"t_max", std::to_string(t_max)}, {"tol", format_double(tol)}};
  report.timestamp = current_timestamp();

  int code = 0;
  Json elements = Json::array();
  for (const DenseAvoidingElement& el : basis.elements) {
    const bool ok = el.certified_dp < 1.0 / static_cast<double>(el.n);
    elements.push_back(Json{{"n", el.n},
                            {"omega", el.omega},
                            {"c", el.c},
                            {"certified_dp", el.certified_dp},
                            {"within_radius", ok}});
    if (!ok) code = 2;
  }
  report.results.push_back(Json{{"kind", "dense_avoiding_basis"},
                                {"gamma", basis.gamma},
                                {"elements", elements}});

  const RadialSchedule schedule{1, t_max};
  std::vector<RadialSample> last_trace;
  if (combos > 0) {
    const DenseAvoidingContext ctx = prepare_dense_avoiding(basis, count, schedule, tol);
    RationalSampler sampler(seed);
    Json records = Json::array();
    for (int i = 0; i < combos; ++i) {
      const auto lambda = sampler.vector_with_last_nonzero(count);
      const DenseAvoidingVerification ver = verify_dense_avoiding(lambda, basis, ctx, M, tol);
      Json jr{{"combo", i},
              {"arc_a", ver.arc.a},
              {"arc_b", ver.arc.b},
              {"crossed", ver.crossed},
              {"all_lower_stabilized", ver.all_lower_stabilized},
              {"conclusion", ver.conclusion}};
      jr["crossing_t"] = ver.crossing_t ? Json(*ver.crossing_t) : Json();
      records.push_back(jr);
      if (!ver.crossed || ver.any_flagged) code = 2;
      last_trace = ver.combination_trace;
    }
    report.results.push_back(Json{{"kind", "dense_avoiding_verifications"}, {"records", records}});
    Json rows = Json::array();
    for (const RadialSample& s : last_trace) rows.push_back(to_json(s));
    report.results.push_back(Json{{"kind", "radial_trace"}, {"rows", rows}});
  }
  out.write(report, last_trace.empty() ? std::nullopt
                                       : std::optional<std::string>(to_csv(RadialTraceCsv{last_trace})));
  return code;
}

int run_thma(double p, std::uint64_t K, std::vector<double> below_q, std::vector<double> deltas,
             std::vector<double> thresholds, int t_max, double tol, const Output& out) {
  TheoremAProbeConfig config;
  config.below_q = below_q;
  config.at_or_above = deltas;
  config.thresholds = thresholds.empty() ? std::vector<double>{10.0, 100.0} : thresholds;
  config.schedule = RadialSchedule{1, t_max};
  config.tol = tol;
  const TheoremAWitness w = theoremA_witness(p, K, nullptr, config);

  ExperimentReport report;
  report.command = "thma";
  report.parameters = {{"p", format_double(p)}, {"k", std::to_string(K)},
                       {"t_max", std::to_string(t_max)}, {"tol", format_double(tol)}};
  report.timestamp = current_timestamp();

  Json construction{{"kind", "theorem_a_witness"}, {"gamma", w.gamma}};
  Json jomegas = Json::array();
  for (double o : w.omegas) jomegas.push_back(o);
  Json jeps = Json::array();
  for (double e : w.epsilons) jeps.push_back(e);
  construction["omegas"] = jomegas;
  construction["epsilons"] = jeps;
  report.results.push_back(construction);

  int code = 0;
  for (const TheoremAClause1& c1 : w.clause1) {
    Json rows = Json::array();
    for (const RadialSample& s : c1.trace) rows.push_back(to_json(s));
    report.results.push_back(Json{{"kind", "clause1"},
                                  {"q", c1.q},
                                  {"boundary_value", c1.boundary_value},
                                  {"refined_delta", c1.refined_delta},
                                  {"stable", c1.stable},
                                  {"rows", rows}});
    if (!c1.stable) code = 2;
  }
  std::vector<RadialSample> first_trace;
  for (const TheoremAClause2& c2 : w.clause2) {
    report.results.push_back(Json{{"kind", "clause2"},
                                  {"term", c2.term},
                                  {"delta", c2.delta_exponent},
                                  {"growth", to_json(c2.growth)}});
    if (first_trace.empty()) first_trace = c2.growth.trace;
    bool crossed_all = true;
    for (const ThresholdCrossing& cr : c2.growth.thresholds) crossed_all &= cr.first_t.has_value();
    if (!crossed_all || c2.growth.any_flagged) code = 2;
  }
  out.write(report, first_trace.empty()
                        ? std::nullopt
                        : std::optional<std::string>(to_csv(RadialTraceCsv{first_trace})));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genlab: certified sequence-space and Hardy-space experiments"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--out-dir", out.dir, "directory for report.json / trace.csv")
      ->capture_default_str();
  app.add_option("--append-log", out.append_log,
                 "append the report as one JSON line to this file (append-only run log)");

  // witness
  auto* witness = app.add_subcommand("witness", "certified strict-inclusion witness for a chain pair");
  std::string ambient = "linf", sub = "c0";
  witness->add_option("--ambient", ambient, "ambient space (linf, c0, lp:<p>, cap:<a>)")->required();
  witness->add_option("--sub", sub, "subspace")->required();

  // membership
  auto* member = app.add_subcommand("membership", "certified membership verdict");
  std::string seq_text = "powerlaw:1", space_text = "lp:2";
  member->add_option("--seq", seq_text, "sequence (zero, ones, unit:<n>, powerlaw:<g>[:<j>])")
      ->required();
  member->add_option("--space", space_text, "space spec")->required();

  // lineability
  auto* lin = app.add_subcommand("lineability", "dense lineable basis and certified escapes");
  double b = 1.0, M = 1000.0;
  std::uint64_t count = 8, seed = 0;
  int combos = 100;
  Index trunc = default_truncation();
  lin->add_option("--b", b, "target exponent");
  lin->add_option("--count", count, "basis size");
  lin->add_option("--combos", combos, "random coefficient vectors");
  lin->add_option("--seed", seed, "sampler seed");
  lin->add_option("--M", M, "escape threshold");
  lin->add_option("--trunc", trunc, "series truncation");

  // spaceability
  auto* spc = app.add_subcommand("spaceability", "closed-subspace basis, recovery and escapes");
  std::string sp_ambient = "c0", sp_target = "lp";
  double sp_b = 1.0, sp_M = 100.0;
  std::uint64_t sp_count = 8, sp_seed = 0, sp_K = 8;
  int sp_combos = 100;
  spc->add_option("--ambient", sp_ambient, "ambient space");
  spc->add_option("--target", sp_target, "'lp' (uses --b) or 'c0' (indicator basis)");
  spc->add_option("--b", sp_b, "avoided exponent");
  spc->add_option("--count", sp_count, "basis size");
  spc->add_option("--combos", sp_combos, "random coefficient vectors");
  spc->add_option("--seed", sp_seed, "sampler seed");
  spc->add_option("--M", sp_M, "escape threshold");
  spc->add_option("--K", sp_K, "positions per block for decompose");

  // hardy-growth
  auto* hg = app.add_subcommand("hardy-growth", "localized growth probe for a singular term");
  double hg_gamma = 0.75, hg_q = 2.0, hg_omega = 0.0, hg_coeff = 1.0, hg_tol = 1e-8;
  int hg_tmin = 1, hg_tmax = 14, hg_budget = 60000;
  std::string hg_arc;
  std::vector<double> hg_M;
  hg->add_option("--gamma", hg_gamma, "singular exponent");
  hg->add_option("--q", hg_q, "integral exponent");
  hg->add_option("--omega", hg_omega, "singular direction (radians)");
  hg->add_option("--c", hg_coeff, "coefficient modulus");
  hg->add_option("--arc", hg_arc, "arc 'a,b' in radians (b-a >= 2pi = full circle)");
  hg->add_option("--t-min", hg_tmin, "first schedule index");
  hg->add_option("--t-max", hg_tmax, "last schedule index");
  hg->add_option("--tol", hg_tol, "relative quadrature tolerance");
  hg->add_option("--M-list", hg_M, "threshold list");
  hg->add_option("--panel-budget", hg_budget, "quadrature panel budget");

  // hardy-basis
  auto* hb = app.add_subcommand("hardy-basis", "dense avoiding basis and combination escapes");
  double hb_p = 1.0, hb_q = 2.0, hb_M = 100.0, hb_tol = 1e-8;
  std::uint64_t hb_n = 8, hb_seed = 0;
  int hb_combos = 0, hb_tmax = 14;
  hb->add_option("--p", hb_p, "metric exponent");
  hb->add_option("--q", hb_q, "avoided exponent");
  hb->add_option("--n", hb_n, "basis size");
  hb->add_option("--combos", hb_combos, "random coefficient vectors (0 = construction only)");
  hb->add_option("--seed", hb_seed, "sampler seed");
  hb->add_option("--M", hb_M, "localized threshold");
  hb->add_option("--t-max", hb_tmax, "last schedule index");
  hb->add_option("--tol", hb_tol, "relative quadrature tolerance");

  // thma
  auto* ta = app.add_subcommand("thma", "dense-singularity candidate witness with probes");
  double ta_p = 1.0, ta_tol = 1e-8;
  std::uint64_t ta_k = 16;
  int ta_tmax = 14;
  std::vector<double> ta_q, ta_delta, ta_M;
  ta->add_option("--p", ta_p, "critical exponent");
  ta->add_option("--k", ta_k, "number of singular directions");
  ta->add_option("--q", ta_q, "clause-1 exponents (< p)");
  ta->add_option("--delta", ta_delta, "clause-2 exponents (>= p)");
  ta->add_option("--M-list", ta_M, "clause-2 thresholds");
  ta->add_option("--t-max", ta_tmax, "last schedule index");
  ta->add_option("--tol", ta_tol, "relative quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (*witness) return run_witness(ambient, sub, out);
    if (*member) return run_membership(seq_text, space_text, out);
    if (*lin) return run_lineability(b, count, combos, seed, M, trunc, out);
    if (*spc) return run_spaceability(sp_ambient, sp_target, sp_b, sp_count, sp_combos, sp_seed,
                                      sp_M, sp_K, out);
    if (*hg) return run_hardy_growth(hg_gamma, hg_q, hg_omega, hg_coeff, hg_arc, hg_tmin, hg_tmax,
                                     hg_tol, hg_M, hg_budget, out);
    if (*hb) return run_hardy_basis(hb_p, hb_q, hb_n, hb_combos, hb_seed, hb_M, hb_tmax, hb_tol, out);
    if (*ta) return run_thma(ta_p, ta_k, ta_q, ta_delta, ta_M, ta_tmax, ta_tol, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const UndeterminedError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
