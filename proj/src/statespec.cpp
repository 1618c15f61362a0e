#include "telenoise/statespec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "telenoise/fidelity.hpp"

namespace telenoise {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail_at(const std::string& name, int line,
                          const std::string& what) {
  throw std::invalid_argument(name + ":" + std::to_string(line) + ": " + what);
}

[[noreturn]] void fail(const std::string& name, const std::string& what) {
  throw std::invalid_argument(name + ": " + what);
}

const std::map<std::string, std::string>* find_section(
    const SpecDocument& doc, const std::string& section) {
  const auto it = doc.sections.find(section);
  return it == doc.sections.end() ? nullptr : &it->second;
}

const std::map<std::string, std::string>& need_section(
    const SpecDocument& doc, const std::string& section) {
  const auto* s = find_section(doc, section);
  if (!s) fail(doc.name, "missing [" + section + "] section");
  return *s;
}

std::optional<std::string> get_str(const std::map<std::string, std::string>& s,
                                   const std::string& key) {
  const auto it = s.find(key);
  if (it == s.end()) return std::nullopt;
  return it->second;
}

std::string need_str(const SpecDocument& doc,
                     const std::map<std::string, std::string>& s,
                     const std::string& section, const std::string& key) {
  const auto v = get_str(s, key);
  if (!v) fail(doc.name, "missing key '" + key + "' in [" + section + "]");
  return *v;
}

double parse_double(const SpecDocument& doc, const std::string& key,
                    const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (trim(text.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  fail(doc.name, "key '" + key + "': expected a number, got '" + text + "'");
}

int parse_int(const SpecDocument& doc, const std::string& key,
              const std::string& text) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (trim(text.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  fail(doc.name, "key '" + key + "': expected an integer, got '" + text + "'");
}

std::vector<double> parse_doubles(const SpecDocument& doc,
                                  const std::string& key,
                                  const std::string& text, std::size_t count) {
  std::string space = text;
  for (char& c : space)
    if (c == ',') c = ' ';
  std::istringstream in(space);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  std::string rest;
  if (in >> rest || out.size() != count)
    fail(doc.name, "key '" + key + "': expected " + std::to_string(count) +
                       " numbers, got '" + text + "'");
  return out;
}

Eigen::Vector3d parse_vec3(const SpecDocument& doc, const std::string& key,
                           const std::string& text) {
  const auto v = parse_doubles(doc, key, text, 3);
  return Eigen::Vector3d(v[0], v[1], v[2]);
}

}  // namespace

SpecDocument parse_spec_text(const std::string& text, const std::string& name) {
  SpecDocument doc;
  doc.name = name;
  std::istringstream in(text);
  std::string line;
  std::string current;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail_at(name, lineNo, "unterminated section header '" + line + "'");
      current = trim(line.substr(1, line.size() - 2));
      if (current.empty()) fail_at(name, lineNo, "empty section name");
      doc.sections[current];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail_at(name, lineNo, "expected 'key = value', got '" + line + "'");
    if (current.empty())
      fail_at(name, lineNo, "key outside any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail_at(name, lineNo, "empty key");
    auto& sec = doc.sections[current];
    if (!sec.emplace(key, value).second)
      fail_at(name, lineNo, "duplicate key '" + key + "'");
  }
  return doc;
}

SpecDocument parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path);
}

TwoQubitState StateFamilySpec::build() const {
  switch (family) {
    case Family::Dense:
      return TwoQubitState::from_matrix(dense);
    case Family::Pure:
      return pure_state(a);
    case Family::Werner:
      return werner_state(epsilon);
    case Family::Tdiag:
      return tdiag_state(t, r, s);
  }
  throw std::logic_error("unreachable state family");
}

std::string StateFamilySpec::label() const {
  switch (family) {
    case Family::Dense:
      return "dense";
    case Family::Pure:
      return "pure(a=" + format_sig(a, 6) + ")";
    case Family::Werner:
      return "werner(epsilon=" + format_sig(epsilon, 6) + ")";
    case Family::Tdiag:
      return "tdiag(t=" + format_sig(t(0), 6) + "," + format_sig(t(1), 6) +
             "," + format_sig(t(2), 6) + ")";
  }
  throw std::logic_error("unreachable state family");
}

StateFamilySpec parse_state_spec(const SpecDocument& doc) {
  const auto& sec = need_section(doc, "state");
  const std::string family = need_str(doc, sec, "state", "family");
  StateFamilySpec spec;
  if (family == "pure") {
    spec.family = StateFamilySpec::Family::Pure;
    spec.a = parse_double(doc, "a", need_str(doc, sec, "state", "a"));
  } else if (family == "werner") {
    spec.family = StateFamilySpec::Family::Werner;
    spec.epsilon =
        parse_double(doc, "epsilon", need_str(doc, sec, "state", "epsilon"));
  } else if (family == "tdiag") {
    spec.family = StateFamilySpec::Family::Tdiag;
    spec.t = parse_vec3(doc, "t", need_str(doc, sec, "state", "t"));
    if (const auto r = get_str(sec, "r")) spec.r = parse_vec3(doc, "r", *r);
    if (const auto s = get_str(sec, "s")) spec.s = parse_vec3(doc, "s", *s);
  } else if (family == "dense") {
    spec.family = StateFamilySpec::Family::Dense;
    for (int row = 0; row < 4; ++row) {
      const std::string key = "row" + std::to_string(row);
      const auto vals =
          parse_doubles(doc, key, need_str(doc, sec, "state", key), 8);
      for (int col = 0; col < 4; ++col)
        spec.dense(row, col) = {vals[2 * col], vals[2 * col + 1]};
    }
  } else {
    fail(doc.name, "unknown state family '" + family +
                       "' (expected pure, werner, tdiag, or dense)");
  }
  return spec;
}

StateFamilySpec load_state_spec(const std::string& path) {
  return parse_state_spec(parse_spec_file(path));
}

NoiseModelI ChannelSpec::model_i() const {
  if (isModelII) return to_model_i(NoiseModelII(eta, etaPrime));
  return NoiseModelI(p[0], p[1], p[2], p[3]);
}

std::optional<NoiseModelII> ChannelSpec::model_ii() const {
  if (!isModelII) return std::nullopt;
  return NoiseModelII(eta, etaPrime);
}

std::string sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::Concurrence:
      return "concurrence";
    case SweepVariable::Epsilon:
      return "epsilon";
    case SweepVariable::P0:
      return "p0";
    case SweepVariable::Eta:
      return "eta";
  }
  throw std::logic_error("unreachable sweep variable");
}

SweepSpec parse_sweep_spec(const SpecDocument& doc) {
  const auto& sweep = need_section(doc, "sweep");
  SweepSpec spec;
  const std::string var = need_str(doc, sweep, "sweep", "variable");
  if (var == "concurrence")
    spec.variable = SweepVariable::Concurrence;
  else if (var == "epsilon")
    spec.variable = SweepVariable::Epsilon;
  else if (var == "p0")
    spec.variable = SweepVariable::P0;
  else if (var == "eta")
    spec.variable = SweepVariable::Eta;
  else
    fail(doc.name, "unknown sweep variable '" + var +
                       "' (expected concurrence, epsilon, p0, or eta)");

  spec.lo = parse_double(doc, "lo", need_str(doc, sweep, "sweep", "lo"));
  spec.hi = parse_double(doc, "hi", need_str(doc, sweep, "sweep", "hi"));
  spec.steps =
      parse_int(doc, "steps", need_str(doc, sweep, "sweep", "steps"));
  if (!(spec.lo < spec.hi))
    fail(doc.name, "sweep range requires lo < hi");
  if (spec.steps < 2) fail(doc.name, "sweep requires steps >= 2");
  if (const auto rest = get_str(sweep, "rest")) {
    spec.restWeights = parse_vec3(doc, "rest", *rest);
    if (spec.restWeights.minCoeff() < 0.0 || spec.restWeights.sum() <= 0.0)
      fail(doc.name, "rest weights must be nonnegative with positive sum");
  }

  if (const auto* ch = find_section(doc, "channel")) {
    const std::string model =
        get_str(*ch, "model").value_or(std::string("I"));
    if (model == "I") {
      spec.channel.isModelII = false;
      if (const auto p = get_str(*ch, "p")) {
        const auto v = parse_doubles(doc, "p", *p, 4);
        spec.channel.p = {v[0], v[1], v[2], v[3]};
      }
    } else if (model == "II") {
      spec.channel.isModelII = true;
      spec.channel.eta =
          parse_double(doc, "eta", need_str(doc, *ch, "channel", "eta"));
      spec.channel.etaPrime = parse_double(
          doc, "eta_prime", need_str(doc, *ch, "channel", "eta_prime"));
    } else {
      fail(doc.name, "channel model must be I or II");
    }
  }

  if (const auto* st = find_section(doc, "strategy")) {
    const std::string mode =
        get_str(*st, "mode").value_or(std::string("standard"));
    if (mode == "standard")
      spec.strategy = StrategyMode::Standard;
    else if (mode == "regime")
      spec.strategy = StrategyMode::Regime;
    else if (mode == "search")
      spec.strategy = StrategyMode::Search;
    else
      fail(doc.name, "strategy mode must be standard, regime, or search");
  }

  if (find_section(doc, "state")) spec.state = parse_state_spec(doc);

  if (spec.variable == SweepVariable::P0) {
    if (!spec.state) fail(doc.name, "p0 sweep requires a [state] section");
    if (spec.channel.isModelII)
      fail(doc.name, "p0 sweep fixes the four-outcome channel; use model I");
  }
  if (spec.variable == SweepVariable::Eta) {
    if (!spec.state) fail(doc.name, "eta sweep requires a [state] section");
    if (!spec.channel.isModelII)
      fail(doc.name,
           "eta sweep requires [channel] model = II with eta_prime");
    spec.etaPrimeFixed = spec.channel.etaPrime;
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  return parse_sweep_spec(parse_spec_file(path));
}

namespace {

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

SweepRow evaluate_row(double x, const CanonicalForm& cf,
                      const NoiseModelI& ch, StrategyMode mode) {
  const CorrectionStrategy strat = pick_strategy(mode, cf, ch);
  const ChiMatrix chi = chi_matrix(cf, ch, strat);
  SweepRow row;
  row.x = x;
  row.fidelity = average_fidelity(chi);
  row.deviation = fidelity_deviation(chi);
  row.nonClassical = row.fidelity > 2.0 / 3.0;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  std::optional<CanonicalForm> fixedCf;
  if (spec.state) fixedCf = canonicalize(spec.state->build()).form;

  for (int i = 0; i < spec.steps; ++i) {
    const double x =
        spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) /
                      static_cast<double>(spec.steps - 1);
    switch (spec.variable) {
      case SweepVariable::Concurrence: {
        if (x < 0.0 || x > 1.0)
          throw std::invalid_argument(
              "concurrence sweep range must lie in [0, 1]");
        const double a =
            std::sqrt(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - x * x))));
        const CanonicalForm cf = canonicalize(pure_state(a)).form;
        rows.push_back(evaluate_row(x, cf, spec.channel.model_i(),
                                    spec.strategy));
        break;
      }
      case SweepVariable::Epsilon: {
        const CanonicalForm cf = canonicalize(werner_state(x)).form;
        rows.push_back(evaluate_row(x, cf, spec.channel.model_i(),
                                    spec.strategy));
        break;
      }
      case SweepVariable::P0: {
        if (x < 0.0 || x > 1.0)
          throw std::invalid_argument("p0 sweep range must lie in [0, 1]");
        const Eigen::Vector3d w =
            spec.restWeights * ((1.0 - x) / spec.restWeights.sum());
        rows.push_back(evaluate_row(
            x, *fixedCf, NoiseModelI(x, w(0), w(1), w(2)), spec.strategy));
        break;
      }
      case SweepVariable::Eta: {
        const NoiseModelII ch(x, spec.etaPrimeFixed);
        rows.push_back(
            evaluate_row(x, *fixedCf, to_model_i(ch), spec.strategy));
        break;
      }
    }
  }
  return rows;
}

void write_sweep_csv(const std::string& path, const std::string& varName,
                     const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument(path + ": cannot open for writing");
  out << varName << ",F,Delta,nonClassical\n";
  for (const SweepRow& r : rows)
    out << format_sig(r.x, 12) << ',' << format_sig(r.fidelity, 12) << ','
        << format_sig(r.deviation, 12) << ',' << (r.nonClassical ? 1 : 0)
        << '\n';
  if (!out) throw std::invalid_argument(path + ": write failed");
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", std::max(1, std::min(17, digits)),
                v);
  return buf;
}

}  // namespace telenoise
