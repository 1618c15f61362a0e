#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "telenoise/canonical.hpp"
#include "telenoise/channels.hpp"
#include "telenoise/qstate.hpp"
#include "telenoise/strategy.hpp"

namespace telenoise {

// Sectioned key-value text: [section] headers, key = value lines, # comments.
// Errors carry "<name>:<line>:" prefixes.
struct SpecDocument {
  std::map<std::string, std::map<std::string, std::string>> sections;
  std::string name;
};

SpecDocument parse_spec_text(const std::string& text, const std::string& name);
SpecDocument parse_spec_file(const std::string& path);

// One of four state families in a [state] section:
//   family = pure    with a = <real>
//   family = werner  with epsilon = <real>
//   family = tdiag   with t = x,y,z and optional r, s
//   family = dense   with row0..row3 = 8 reals each (re,im per entry)
struct StateFamilySpec {
  enum class Family { Dense, Pure, Werner, Tdiag };

  Family family;
  Eigen::Matrix4cd dense;
  double a = 0.0;
  double epsilon = 0.0;
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Vector3d r = Eigen::Vector3d::Zero();
  Eigen::Vector3d s = Eigen::Vector3d::Zero();

  TwoQubitState build() const;
  std::string label() const;
};

StateFamilySpec parse_state_spec(const SpecDocument& doc);
StateFamilySpec load_state_spec(const std::string& path);

// Channel bound either as four error probabilities (model I) or as two
// no-flip probabilities (model II). Model II always exposes its model I
// image for the fidelity engine.
struct ChannelSpec {
  bool isModelII = false;
  std::array<double, 4> p = {1.0, 0.0, 0.0, 0.0};
  double eta = 1.0;
  double etaPrime = 1.0;

  NoiseModelI model_i() const;
  std::optional<NoiseModelII> model_ii() const;
};

enum class SweepVariable { Concurrence, Epsilon, P0, Eta };
enum class StrategyMode { Standard, Regime, Search };

std::string sweep_variable_name(SweepVariable v);

// [sweep] variable/lo/hi/steps plus bindings: [channel] for the fixed
// channel, [strategy] mode, [state] for channel sweeps over a fixed state.
// p0 sweeps split the remaining weight by rest = w1,w2,w3; eta sweeps hold
// eta_prime fixed.
struct SweepSpec {
  SweepVariable variable;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  StrategyMode strategy = StrategyMode::Standard;
  ChannelSpec channel;
  std::optional<StateFamilySpec> state;
  Eigen::Vector3d restWeights = Eigen::Vector3d::Ones();
  double etaPrimeFixed = 1.0;
};

SweepSpec parse_sweep_spec(const SpecDocument& doc);
SweepSpec load_sweep_spec(const std::string& path);

struct SweepRow {
  double x;
  double fidelity;
  double deviation;
  bool nonClassical;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// UTF-8, comma-separated, header row, LF endings, 12 significant digits.
void write_sweep_csv(const std::string& path, const std::string& varName,
                     const std::vector<SweepRow>& rows);

// printf %g-style significant-digit formatting used for all numeric output
// (12 digits CSV, 6 digits reports).
std::string format_sig(double v, int digits);

}  // namespace telenoise
