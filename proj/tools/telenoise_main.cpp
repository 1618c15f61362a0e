#include <array>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "telenoise/canonical.hpp"
#include "telenoise/channels.hpp"
#include "telenoise/costopt.hpp"
#include "telenoise/fidelity.hpp"
#include "telenoise/oracle.hpp"
#include "telenoise/qstate.hpp"
#include "telenoise/statespec.hpp"
#include "telenoise/strategy.hpp"

namespace {

using namespace telenoise;

std::string num(double v) { return format_sig(v, 6); }

std::string vec3(const Eigen::Vector3d& v) {
  return "(" + num(v(0)) + ", " + num(v(1)) + ", " + num(v(2)) + ")";
}

std::string probs(const NoiseModelI& ch) {
  return "(" + num(ch.p[0]) + ", " + num(ch.p[1]) + ", " + num(ch.p[2]) +
         ", " + num(ch.p[3]) + ")";
}

std::string det_sign_name(DetSign d) {
  switch (d) {
    case DetSign::Negative:
      return "negative";
    case DetSign::Zero:
      return "zero";
    case DetSign::Positive:
      return "positive";
  }
  return "?";
}

std::string strat_str(const CorrectionStrategy& s) {
  std::string out = "(";
  for (int j = 0; j < 4; ++j) {
    out += "sigma_" + std::to_string(s.pauli[j]);
    if (j < 3) out += ", ";
  }
  return out + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

struct ChannelFlags {
  std::string pStr;
  double eta = 1.0;
  double etaPrime = 1.0;
  bool hasP = false;
  bool hasEta = false;
  bool hasEtaPrime = false;
};

void add_channel_flags(CLI::App* sub, ChannelFlags& f) {
  sub->add_option("--p", f.pStr,
                  "four-outcome channel probabilities p0,p1,p2,p3")
      ->each([&f](const std::string&) { f.hasP = true; });
  sub->add_option("--eta", f.eta, "first-bit no-flip probability (model II)")
      ->each([&f](const std::string&) { f.hasEta = true; });
  sub->add_option("--eta-prime", f.etaPrime,
                  "second-bit no-flip probability (model II)")
      ->each([&f](const std::string&) { f.hasEtaPrime = true; });
}

ChannelSpec channel_from_flags(const ChannelFlags& f) {
  ChannelSpec cs;
  if (f.hasP && (f.hasEta || f.hasEtaPrime))
    throw std::invalid_argument("--p conflicts with --eta/--eta-prime");
  if (f.hasEta != f.hasEtaPrime)
    throw std::invalid_argument("--eta and --eta-prime must be given together");
  if (f.hasEta) {
    cs.isModelII = true;
    cs.eta = f.eta;
    cs.etaPrime = f.etaPrime;
    return cs;
  }
  if (f.hasP) {
    std::string s = f.pStr;
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<double> v;
    double x;
    while (in >> x) v.push_back(x);
    if (v.size() != 4)
      throw std::invalid_argument("--p expects four numbers, got '" + f.pStr +
                                  "'");
    cs.p = {v[0], v[1], v[2], v[3]};
  }
  return cs;
}

StrategyMode parse_strategy_mode(const std::string& s) {
  if (s == "standard") return StrategyMode::Standard;
  if (s == "regime") return StrategyMode::Regime;
  if (s == "search") return StrategyMode::Search;
  throw std::invalid_argument("--strategy must be standard, regime, or search");
}

CorrectionStrategy pick_strategy(StrategyMode mode, const CanonicalForm& cf,
                                 const NoiseModelI& ch) {
  switch (mode) {
    case StrategyMode::Standard:
      return standard_strategy();
    case StrategyMode::Regime:
      return regime_strategy(ch);
    case StrategyMode::Search:
      return search_all_strategies(cf, ch).best;
  }
  throw std::logic_error("unreachable strategy mode");
}

void print_channel(const ChannelSpec& cs, const NoiseModelI& chI) {
  if (cs.isModelII) {
    const NoiseModelII m2(cs.eta, cs.etaPrime);
    const auto [i1, i2] = mutual_information(m2);
    std::cout << "channel: model II eta = " << num(cs.eta)
              << ", eta_prime = " << num(cs.etaPrime) << "\n";
    std::cout << "model I image: p = " << probs(chI) << "\n";
    std::cout << "mutual information: " << num(i1 + i2) << " bits (" << num(i1)
              << " + " << num(i2) << ")\n";
  } else {
    std::cout << "channel: model I p = " << probs(chI) << "\n";
    std::cout << "mutual information: " << num(mutual_information(chI))
              << " bits\n";
  }
}

int cmd_analyze(const std::string& stateFile, const ChannelSpec& cs) {
  const StateFamilySpec st = load_state_spec(stateFile);
  const CanonicalForm cf = canonicalize(st.build()).form;
  const NoiseModelI chI = cs.model_i();

  std::cout << "state: " << st.label() << "\n";
  print_channel(cs, chI);
  std::cout << "canonical tmag: " << vec3(cf.tmag)
            << "  lambda: " << vec3(cf.lambda)
            << "  det sign: " << det_sign_name(cf.detSign) << "\n";
  std::cout << "axis correlation: " << vec3(cf.axis_correlation()) << "\n";

  const FidelityReport std_ = make_report(cf, chI, standard_strategy(),
                                          "standard");
  const StrategySearch search = search_all_strategies(cf, chI);
  const FidelityReport opt = make_report(cf, chI, search.best, "search");
  std::cout << "standard strategy: F = " << num(std_.fidelity)
            << ", Delta = " << num(std_.deviation) << "\n";
  std::cout << "optimal strategy:  F = " << num(opt.fidelity)
            << ", Delta = " << num(opt.deviation)
            << ", corrections = " << strat_str(search.best) << "\n";

  try {
    const NonClassicality nc =
        cs.isModelII ? nonclassical_condition(cf, NoiseModelII(cs.eta,
                                                               cs.etaPrime))
                     : nonclassical_condition(cf, chI);
    const double threshold = 0.5 * (cf.tmag.sum() - 1.0);
    std::cout << "non-classical: " << yesno(nc.nonClassical)
              << " (f_noise = " << num(nc.fNoise)
              << ", threshold = " << num(threshold) << ")\n";
  } catch (const std::domain_error& e) {
    std::cout << "non-classical: not applicable (" << e.what() << ")\n";
  }

  const Eigen::Vector2d zr =
      cs.isModelII
          ? zero_deviation_residual(cf, NoiseModelII(cs.eta, cs.etaPrime))
          : zero_deviation_residual(cf, chI);
  std::cout << "zero-deviation residuals: (" << num(zr(0)) << ", "
            << num(zr(1)) << ")\n";
  std::cout << "dispersion-free: " << yesno(std_.dispersionFree) << "\n";
  return 0;
}

int cmd_sweep(const std::string& sweepFile, const std::string& outCsv) {
  const SweepSpec spec = load_sweep_spec(sweepFile);
  const std::vector<SweepRow> rows = run_sweep(spec);
  write_sweep_csv(outCsv, sweep_variable_name(spec.variable), rows);
  std::cout << "wrote " << rows.size() << " rows to " << outCsv << "\n";
  return 0;
}

int cmd_verify(const std::string& stateFile, const ChannelSpec& cs,
               std::uint64_t samples, std::uint64_t seed, int threads,
               StrategyMode mode) {
  if (samples < 1000)
    throw std::invalid_argument("--samples must be at least 1000");
  const StateFamilySpec st = load_state_spec(stateFile);
  const CanonicalForm cf = canonicalize(st.build()).form;
  const NoiseModelI chI = cs.model_i();
  const CorrectionStrategy strat = pick_strategy(mode, cf, chI);

  const ChiMatrix chi = chi_matrix(cf, chI, strat);
  const double closedF = average_fidelity(chi);
  const double closedD = fidelity_deviation(chi);

  const TwoQubitState canon = canonical_state(cf);
  const ExactAverage exact = exact_average(canon, chI, strat);
  const RunStatistics mc =
      haar_average(canon, chI, strat, samples, seed, threads);

  std::cout << "state: " << st.label() << "\n";
  print_channel(cs, chI);
  std::cout << "strategy: " << strat_str(strat) << "\n";
  std::cout << "closed form:  F = " << num(closedF)
            << "  Delta = " << num(closedD) << "\n";
  std::cout << "exact oracle: F = " << num(exact.fidelity)
            << "  Delta = " << num(exact.deviation) << "\n";
  std::cout << "monte carlo:  meanF = " << num(mc.meanF)
            << "  delta = " << num(mc.delta)
            << "  stdError = " << num(mc.stdError) << "  samples = "
            << mc.samples << "\n";

  const double exactGapF = std::abs(exact.fidelity - closedF);
  const double exactGapD = std::abs(exact.deviation - closedD);
  const double band = 5.0 * mc.stdError;
  const double mcGap = std::abs(mc.meanF - closedF);
  const bool pass = exactGapF <= 1e-10 && exactGapD <= 1e-10 && mcGap <= band;
  std::cout << "exact gaps: F " << num(exactGapF) << ", Delta "
            << num(exactGapD) << " (tolerance 1e-10)\n";
  std::cout << "band check: |meanF - F| = " << num(mcGap)
            << " vs 5*stdError = " << num(band) << "\n";
  std::cout << "verification: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 2;
}

int cmd_optimize_cost(const std::string& stateFile, const std::string& model) {
  const StateFamilySpec st = load_state_spec(stateFile);
  const CanonicalForm cf = canonicalize(st.build()).form;
  std::cout << "state: " << st.label() << "\n";
  std::cout << "canonical tmag: " << vec3(cf.tmag)
            << "  det sign: " << det_sign_name(cf.detSign) << "\n";

  const auto statusName = [](CostStatus s) {
    switch (s) {
      case CostStatus::Solved:
        return "solved";
      case CostStatus::Infeasible:
        return "infeasible";
      case CostStatus::Boundary:
        return "boundary";
    }
    return "?";
  };

  if (model == "I") {
    const CostSolutionI sol = min_cost_model_i(cf);
    std::cout << "status: " << statusName(sol.status) << "\n";
    if (sol.status == CostStatus::Infeasible) {
      std::cout << "sum of correlation magnitudes " << num(cf.tmag.sum())
                << " <= 1: no channel reaches the classical threshold\n";
      return 2;
    }
    std::cout << "channel: p = " << probs(*sol.channel) << "\n";
    std::cout << "cost: " << num(sol.cost) << " bits\n";
    std::cout << "constraint residual: " << num(sol.constraintResidual)
              << "\n";
    std::cout << "stationary residuals: (" << num(sol.stationaryResiduals(0))
              << ", " << num(sol.stationaryResiduals(1)) << ")\n";
    return 0;
  }
  if (model == "II") {
    const CostSolutionII sol = min_cost_model_ii(cf);
    std::cout << "status: " << statusName(sol.status) << "\n";
    if (sol.status == CostStatus::Infeasible) {
      std::cout << "sum of correlation magnitudes " << num(cf.tmag.sum())
                << " <= 1: no channel reaches the classical threshold\n";
      return 2;
    }
    std::cout << "channel: eta = " << num(sol.channel->eta)
              << ", eta_prime = " << num(sol.channel->etaPrime) << "\n";
    const NoiseModelI image = to_model_i(*sol.channel);
    std::cout << "model I image: p = " << probs(image)
              << " (joint information " << num(mutual_information(image))
              << " bits)\n";
    std::cout << "cost: " << num(sol.cost) << " bits\n";
    std::cout << "constraint residual: " << num(sol.constraintResidual)
              << "\n";
    std::cout << "stationary residuals: (" << num(sol.stationaryResiduals(0))
              << ", " << num(sol.stationaryResiduals(1)) << ")\n";
    return 0;
  }
  throw std::invalid_argument("--model must be I or II");
}

int cmd_find_channel(const std::string& stateFile,
                     const std::vector<std::string>& fixes) {
  const StateFamilySpec st = load_state_spec(stateFile);
  const CanonicalForm cf = canonicalize(st.build()).form;

  std::array<std::optional<double>, 4> fixed;
  for (const std::string& fx : fixes) {
    const std::size_t eq = fx.find('=');
    if (eq == std::string::npos || fx.size() < 4 || fx[0] != 'p' ||
        fx[1] < '0' || fx[1] > '3' || eq != 2)
      throw std::invalid_argument("--fix expects pK=value with K in 0..3, got '"
                                  + fx + "'");
    const int idx = fx[1] - '0';
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(fx.substr(3), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--fix expects a number after '=', got '" +
                                  fx + "'");
    }
    if (fixed[idx])
      throw std::invalid_argument("--fix given twice for p" +
                                  std::to_string(idx));
    fixed[idx] = v;
  }

  std::cout << "state: " << st.label() << "\n";
  std::cout << "canonical tmag: " << vec3(cf.tmag)
            << "  det sign: " << det_sign_name(cf.detSign) << "\n";
  const DispersionFreeResult res = find_dispersion_free_channel(cf, fixed);
  const ChiMatrix chi = chi_matrix(cf, res.channel, standard_strategy());
  std::cout << "channel: p = " << probs(res.channel) << "\n";
  std::cout << "F = " << num(res.fidelity)
            << "  Delta = " << num(fidelity_deviation(chi)) << "\n";
  std::cout << "non-classical: " << yesno(res.nonClassical) << "\n";
  std::cout << "mutual information: " << num(mutual_information(res.channel))
            << " bits\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noisy-classical-channel teleportation fidelity toolkit"};
  app.require_subcommand(1);

  std::string stateFile, sweepFile, outCsv, model = "I", strategyName =
      "standard";
  std::uint64_t samples = 100000, seed = 1;
  int threads = 0;
  std::vector<std::string> fixes;
  ChannelFlags chAnalyze, chVerify;

  CLI::App* analyze =
      app.add_subcommand("analyze", "canonical form, fidelity and deviation");
  analyze->add_option("state", stateFile, "state spec file")->required();
  add_channel_flags(analyze, chAnalyze);

  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  sweep->add_option("sweep", sweepFile, "sweep spec file")->required();
  sweep->add_option("--out", outCsv, "output CSV path")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "closed forms against the protocol simulator");
  verify->add_option("state", stateFile, "state spec file")->required();
  add_channel_flags(verify, chVerify);
  verify->add_option("--samples", samples, "Monte Carlo sample count");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--threads", threads, "worker threads (0 = auto)");
  verify->add_option("--strategy", strategyName,
                     "standard, regime, or search");

  CLI::App* cost = app.add_subcommand(
      "optimize-cost", "least classical information beating the threshold");
  cost->add_option("state", stateFile, "state spec file")->required();
  cost->add_option("--model", model, "I or II")->required();

  CLI::App* findCh = app.add_subcommand(
      "find-channel", "channel with zero fidelity deviation");
  findCh->add_option("state", stateFile, "state spec file")->required();
  findCh->add_option("--fix", fixes, "pin a probability, e.g. --fix p1=0.15");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(stateFile, channel_from_flags(chAnalyze));
    if (app.got_subcommand(sweep)) return cmd_sweep(sweepFile, outCsv);
    if (app.got_subcommand(verify))
      return cmd_verify(stateFile, channel_from_flags(chVerify), samples, seed,
                        threads, parse_strategy_mode(strategyName));
    if (app.got_subcommand(cost)) return cmd_optimize_cost(stateFile, model);
    if (app.got_subcommand(findCh)) return cmd_find_channel(stateFile, fixes);
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
