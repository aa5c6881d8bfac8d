// Copyright 2026 The Precoding Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "precoding/model.hpp"
#include "precoding/rng.hpp"

namespace precoding {

struct UnknownScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Architecture { FullyDigital, ConstantEnvelope, OneBit, Hybrid };

inline std::string to_string(Architecture a) {
  switch (a) {
    case Architecture::FullyDigital: return "FullyDigital";
    case Architecture::ConstantEnvelope: return "ConstantEnvelope";
    case Architecture::OneBit: return "OneBit";
    case Architecture::Hybrid: return "Hybrid";
  }
  throw std::logic_error("unreachable");
}

inline Architecture architecture_from_string(const std::string& s) {
  if (s == "FullyDigital") return Architecture::FullyDigital;
  if (s == "ConstantEnvelope") return Architecture::ConstantEnvelope;
  if (s == "OneBit") return Architecture::OneBit;
  if (s == "Hybrid") return Architecture::Hybrid;
  throw std::invalid_argument("unknown Architecture: " + s);
}

struct SystemConfig {
  int scenario_id = 0;
  std::size_t N_t = 0;           // transmit antennas
  std::size_t K = 0;             // users
  std::optional<std::size_t> N_rf;  // RF chains (hybrid only)
  std::optional<std::size_t> M;     // PSK/QAM order (symbol-level scenarios)
  Architecture architecture = Architecture::FullyDigital;
};

struct ChannelSet {
  ComplexMatrix H;                     // K x N_t user channels
  std::optional<ComplexMatrix> h_eve;  // 1 x N_t eavesdropper link
  std::optional<ComplexMatrix> g;      // 1 x N_t primary-user link
  std::optional<ComplexMatrix> G_si;   // self-interference channel
  std::optional<ComplexMatrix> symbols;  // K x 1 per-user PSK symbols
  std::optional<double> epsilon;       // CSI-error radius
  double sigma2 = 1.0;                 // noise variance [W]
};

struct ScenarioDescriptor {
  SystemConfig sys;
  ChannelSet ch;
  ObjectiveKind obj = ObjectiveKind::PowerMin;
  std::vector<Constraint> con;
};

struct TaskDescription {
  std::string text;
};

// sigma^2 = 10^(-snr_db/10) under unit reference power.
inline double noise_variance(double snr_db) {
  if (!std::isfinite(snr_db)) {
    throw std::invalid_argument("noise_variance: snr_db must be finite");
  }
  return std::pow(10.0, -snr_db / 10.0);
}

// i.i.d. CN(0,1) matrix, reproducible from seed.
inline ComplexMatrix generate_channel(std::size_t rows, std::size_t cols,
                                      std::uint64_t seed) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("generate_channel: dims must be positive");
  }
  Rng rng(seed);
  std::vector<cplx> entries(rows * cols);
  for (auto& e : entries) e = rng.cn01();
  return ComplexMatrix(rows, cols, std::move(entries));
}

// ---------------------------------------------------------------------------
// Catalog

// Shared numeric defaults, recorded into every emitted descriptor so results
// are self-describing.
struct CatalogConstants {
  double p_max = 1.0;          // W, reference transmit budget
  double rate_target = 1.0;    // bps/Hz per user (scenario 01)
  double sinr_target = 1.0;    // linear gamma (scenario 05)
  double i_th_factor = 0.1;    // interference temperature = factor * p_max
  double eta_factor = 0.01;    // SIC tolerance = factor * p_max
  double epsilon = 0.1;        // CSI-error radius (scenarios 07, 09)
  double ci_gamma = 1.0;       // CI margin target delta = sigma * sqrt(ci_gamma)
  double power_cap = 40.0;     // W, saturation cap for power-min baselines
};

// Constraint recipe: parameter values are tokens resolved at instantiation.
// Tokens: "p_max", "rate", "gamma", "i_th", "eta", "epsilon", "delta_zero",
// "delta_sigma", or a numeric literal. per_user expands to one constraint per
// user carrying a "user" index parameter.
struct ConstraintSpec {
  ConstraintKind kind;
  std::map<std::string, std::string> params;
  bool per_user = false;
};

struct CatalogEntry {
  int id = 0;
  std::string name;
  std::string objective_phrase;  // task wording, embedded in the description
  ObjectiveKind objective = ObjectiveKind::PowerMin;
  std::string metric;  // power_w | normalized_margin | secrecy_rate | sum_rate
  Architecture architecture = Architecture::FullyDigital;
  std::size_t N_t = 8;
  std::size_t K = 4;
  std::size_t N_rf = 0;  // 0 = absent
  std::size_t M = 0;     // 0 = absent
  bool has_eve = false;
  bool has_g = false;
  bool has_gsi = false;
  bool has_epsilon = false;
  bool has_symbols = false;
  std::vector<ConstraintSpec> constraints;
};

class Catalog {
 public:
  CatalogConstants constants;

  static Catalog defaults() {
    Catalog c;
    auto add = [&c](CatalogEntry e) { c.entries_[e.id] = std::move(e); };

    add({1, "MU-MIMO", "Minimize transmit power with rate constraints",
         ObjectiveKind::PowerMin, "power_w", Architecture::FullyDigital, 8, 4,
         0, 0, false, false, false, false, false,
         {{ConstraintKind::PerUserRate, {{"rate", "rate"}}, true}}});

    add({2, "Constant Envelope precoding",
         "Maximize CI margin with unit modulus constraints",
         ObjectiveKind::CiMarginMax, "normalized_margin",
         Architecture::ConstantEnvelope, 8, 4, 0, 4, false, false, false,
         false, true,
         {{ConstraintKind::UnitModulus, {{"p_max", "p_max"}}, false},
          {ConstraintKind::CiMargin, {{"delta", "delta_zero"}}, false}}});

    add({3, "Hybrid 1-bit MISO", "Maximize CI margin with 1-bit DAC constraints",
         ObjectiveKind::CiMarginMax, "normalized_margin", Architecture::OneBit,
         8, 4, 0, 4, false, false, false, false, true,
         {{ConstraintKind::OneBit, {{"p_max", "p_max"}}, false},
          {ConstraintKind::CiMargin, {{"delta", "delta_zero"}}, false}}});

    add({4, "Cognitive Radio multicast secrecy",
         "Maximize minimum secrecy rate with eavesdropper constraints",
         ObjectiveKind::SecrecyMaxMin, "secrecy_rate",
         Architecture::FullyDigital, 8, 4, 0, 0, true, false, false, false,
         false,
         {{ConstraintKind::TotalPower, {{"p_max", "p_max"}}, false},
          {ConstraintKind::EavesdropperRate, {{"cap", "0"}}, false}}});

    add({5, "Full Duplex QAM",
         "Minimize transmit power with SINR and SIC constraints",
         ObjectiveKind::PowerMin, "power_w", Architecture::FullyDigital, 8, 4,
         0, 4, false, false, true, false, false,
         {{ConstraintKind::PerUserSinr, {{"gamma", "gamma"}}, true},
          {ConstraintKind::SelfInterference, {{"eta", "eta"}}, false}}});

    add({6, "Cognitive Radio Sum Rate Maximization",
         "Maximize sum rate with transmit power and interference limits",
         ObjectiveKind::SumRateMax, "sum_rate", Architecture::FullyDigital, 8,
         4, 0, 0, false, true, false, false, false,
         {{ConstraintKind::TotalPower, {{"p_max", "p_max"}}, false},
          {ConstraintKind::InterferenceTemperature, {{"i_th", "i_th"}}, false}}});

    add({7, "Cognitive Radio Inference Robustness",
         "Maximize sum rate with interference temperature constraints",
         ObjectiveKind::SumRateMax, "sum_rate", Architecture::FullyDigital, 8,
         4, 0, 0, false, true, false, true, false,
         {{ConstraintKind::TotalPower, {{"p_max", "p_max"}}, false},
          {ConstraintKind::RobustInterferenceTemperature,
           {{"i_th", "i_th"}, {"epsilon", "epsilon"}}, false}}});

    add({8, "Full Duplex QoS", "Maximize sum rate subject to total power constraint",
         ObjectiveKind::SumRateMax, "sum_rate", Architecture::FullyDigital, 8,
         4, 0, 0, false, false, true, false, false,
         {{ConstraintKind::TotalPower, {{"p_max", "p_max"}}, false}}});

    add({9, "Hybrid Precoding Robustness",
         "Minimize transmit power with CI constraints and imperfect CSI",
         ObjectiveKind::PowerMin, "power_w", Architecture::Hybrid, 8, 4, 4, 4,
         false, false, false, true, true,
         {{ConstraintKind::RobustCiMargin,
           {{"delta", "delta_sigma"}, {"epsilon", "epsilon"}}, false},
          {ConstraintKind::UnitModulus, {{"p_max", "p_max"}}, false}}});

    return c;
  }

  const std::map<int, CatalogEntry>& entries() const { return entries_; }

  const CatalogEntry& entry(int scenario_id) const {
    auto it = entries_.find(scenario_id);
    if (it == entries_.end()) {
      throw UnknownScenario("unknown scenario id " + std::to_string(scenario_id));
    }
    return it->second;
  }

  // Merges an override document: {"constants": {...}, "scenarios": [{...}]}.
  // Scenario objects replace entries with the same id and add new ids.
  void apply_override(const nlohmann::json& j);

 private:
  std::map<int, CatalogEntry> entries_;
};

inline double resolve_param_token(const std::string& token,
                                  const CatalogConstants& c, double sigma2) {
  if (token == "p_max") return c.p_max;
  if (token == "rate") return c.rate_target;
  if (token == "gamma") return c.sinr_target;
  if (token == "i_th") return c.i_th_factor * c.p_max;
  if (token == "eta") return c.eta_factor * c.p_max;
  if (token == "epsilon") return c.epsilon;
  if (token == "delta_zero") return 0.0;
  if (token == "delta_sigma") return std::sqrt(sigma2 * c.ci_gamma);
  std::size_t pos = 0;
  const double v = std::stod(token, &pos);
  if (pos != token.size()) {
    throw std::invalid_argument("catalog: bad parameter token " + token);
  }
  return v;
}

// Builds the task description and structured descriptor for one scenario at a
// given SNR. Channels and symbols depend on (scenario_id, seed) only; snr_db
// enters through sigma2 (and the sigma-scaled CI margin target), so a fixed
// realization can be swept across SNR.
inline std::pair<TaskDescription, ScenarioDescriptor> instantiate_scenario(
    const Catalog& catalog, int scenario_id, double snr_db, std::uint64_t seed) {
  const CatalogEntry& e = catalog.entry(scenario_id);
  const CatalogConstants& c = catalog.constants;
  const double sigma2 = noise_variance(snr_db);

  ScenarioDescriptor theta;
  theta.sys.scenario_id = e.id;
  theta.sys.N_t = e.N_t;
  theta.sys.K = e.K;
  if (e.N_rf > 0) theta.sys.N_rf = e.N_rf;
  if (e.M > 0) theta.sys.M = e.M;
  theta.sys.architecture = e.architecture;

  theta.ch.H = generate_channel(e.K, e.N_t, seed_combine(seed, e.id, 1));
  if (e.has_eve) {
    theta.ch.h_eve = generate_channel(1, e.N_t, seed_combine(seed, e.id, 2));
  }
  if (e.has_g) {
    theta.ch.g = generate_channel(1, e.N_t, seed_combine(seed, e.id, 3));
  }
  if (e.has_gsi) {
    theta.ch.G_si = generate_channel(e.K, e.N_t, seed_combine(seed, e.id, 4));
  }
  if (e.has_symbols) {
    const std::size_t order = e.M > 0 ? e.M : 4;
    Rng rng(seed_combine(seed, e.id, 5));
    std::vector<cplx> s(e.K);
    for (auto& v : s) {
      const double ang = 6.283185307179586476925286766559 *
                         static_cast<double>(rng.integer(order)) /
                         static_cast<double>(order);
      v = cplx{std::cos(ang), std::sin(ang)};
    }
    theta.ch.symbols = ComplexMatrix(e.K, 1, std::move(s));
  }
  if (e.has_epsilon) theta.ch.epsilon = c.epsilon;
  theta.ch.sigma2 = sigma2;

  theta.obj = e.objective;
  for (const ConstraintSpec& spec : e.constraints) {
    const std::size_t copies = spec.per_user ? e.K : 1;
    for (std::size_t u = 0; u < copies; ++u) {
      std::map<std::string, double> params;
      for (const auto& [name, token] : spec.params) {
        params[name] = resolve_param_token(token, c, sigma2);
      }
      if (spec.per_user) params["user"] = static_cast<double>(u);
      theta.con.emplace_back(spec.kind, std::move(params));
    }
  }

  std::ostringstream text;
  text << "Scenario " << (e.id < 10 ? "0" : "") << e.id << " (" << e.name
       << "): " << e.objective_phrase << ". A transmitter with " << e.N_t
       << " antennas";
  if (e.N_rf > 0) text << " and " << e.N_rf << " RF chains";
  text << " serves " << e.K << " single-antenna users";
  if (e.M > 0) text << " using order-" << e.M << " PSK symbols";
  text << "; noise variance " << sigma2 << " W, reference budget " << c.p_max
       << " W.";
  return {TaskDescription{text.str()}, std::move(theta)};
}

inline std::pair<TaskDescription, ScenarioDescriptor> instantiate_scenario(
    int scenario_id, double snr_db, std::uint64_t seed) {
  static const Catalog catalog = Catalog::defaults();
  return instantiate_scenario(catalog, scenario_id, snr_db, seed);
}

// ---------------------------------------------------------------------------
// JSON serialization (documented schema: matrices as nested [re, im] pairs)

inline nlohmann::json to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const cplx& v : m.entries()) {
    entries.push_back({v.real(), v.imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline ComplexMatrix complex_matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (const auto& p : j.at("entries")) {
    entries.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  return {rows, cols, std::move(entries)};
}

inline nlohmann::json to_json(const Constraint& con) {
  return {{"kind", to_string(con.kind)}, {"parameters", con.parameters}};
}

inline Constraint constraint_from_json(const nlohmann::json& j) {
  return {constraint_kind_from_string(j.at("kind").get<std::string>()),
          j.at("parameters").get<std::map<std::string, double>>()};
}

inline nlohmann::json to_json(const ScenarioDescriptor& t) {
  nlohmann::json sys = {{"scenario_id", t.sys.scenario_id},
                        {"N_t", t.sys.N_t},
                        {"K", t.sys.K},
                        {"architecture", to_string(t.sys.architecture)}};
  if (t.sys.N_rf) sys["N_rf"] = *t.sys.N_rf;
  if (t.sys.M) sys["M"] = *t.sys.M;

  nlohmann::json ch = {{"H", to_json(t.ch.H)}, {"sigma2", t.ch.sigma2}};
  if (t.ch.h_eve) ch["h_eve"] = to_json(*t.ch.h_eve);
  if (t.ch.g) ch["g"] = to_json(*t.ch.g);
  if (t.ch.G_si) ch["G_si"] = to_json(*t.ch.G_si);
  if (t.ch.symbols) ch["symbols"] = to_json(*t.ch.symbols);
  if (t.ch.epsilon) ch["epsilon"] = *t.ch.epsilon;

  nlohmann::json con = nlohmann::json::array();
  for (const Constraint& c : t.con) con.push_back(to_json(c));

  return {{"sys", sys}, {"ch", ch}, {"obj", to_string(t.obj)}, {"con", con}};
}

inline ScenarioDescriptor scenario_from_json(const nlohmann::json& j) {
  ScenarioDescriptor t;
  const auto& sys = j.at("sys");
  t.sys.scenario_id = sys.at("scenario_id").get<int>();
  t.sys.N_t = sys.at("N_t").get<std::size_t>();
  t.sys.K = sys.at("K").get<std::size_t>();
  if (sys.contains("N_rf")) t.sys.N_rf = sys.at("N_rf").get<std::size_t>();
  if (sys.contains("M")) t.sys.M = sys.at("M").get<std::size_t>();
  t.sys.architecture =
      architecture_from_string(sys.at("architecture").get<std::string>());

  const auto& ch = j.at("ch");
  t.ch.H = complex_matrix_from_json(ch.at("H"));
  if (ch.contains("h_eve")) t.ch.h_eve = complex_matrix_from_json(ch.at("h_eve"));
  if (ch.contains("g")) t.ch.g = complex_matrix_from_json(ch.at("g"));
  if (ch.contains("G_si")) t.ch.G_si = complex_matrix_from_json(ch.at("G_si"));
  if (ch.contains("symbols")) {
    t.ch.symbols = complex_matrix_from_json(ch.at("symbols"));
  }
  if (ch.contains("epsilon")) t.ch.epsilon = ch.at("epsilon").get<double>();
  t.ch.sigma2 = ch.at("sigma2").get<double>();

  t.obj = objective_from_string(j.at("obj").get<std::string>());
  for (const auto& cj : j.at("con")) t.con.push_back(constraint_from_json(cj));
  return t;
}

inline void Catalog::apply_override(const nlohmann::json& j) {
  if (j.contains("constants")) {
    const auto& c = j.at("constants");
    auto set = [&c](const char* key, double& field) {
      if (c.contains(key)) field = c.at(key).get<double>();
    };
    set("p_max", constants.p_max);
    set("rate_target", constants.rate_target);
    set("sinr_target", constants.sinr_target);
    set("i_th_factor", constants.i_th_factor);
    set("eta_factor", constants.eta_factor);
    set("epsilon", constants.epsilon);
    set("ci_gamma", constants.ci_gamma);
    set("power_cap", constants.power_cap);
  }
  if (!j.contains("scenarios")) return;
  for (const auto& sj : j.at("scenarios")) {
    CatalogEntry e;
    const int id = sj.at("id").get<int>();
    if (auto it = entries_.find(id); it != entries_.end()) e = it->second;
    e.id = id;
    if (sj.contains("name")) e.name = sj.at("name").get<std::string>();
    if (sj.contains("objective_phrase")) {
      e.objective_phrase = sj.at("objective_phrase").get<std::string>();
    }
    if (sj.contains("objective")) {
      e.objective = objective_from_string(sj.at("objective").get<std::string>());
    }
    if (sj.contains("metric")) e.metric = sj.at("metric").get<std::string>();
    if (sj.contains("architecture")) {
      e.architecture =
          architecture_from_string(sj.at("architecture").get<std::string>());
    }
    if (sj.contains("N_t")) e.N_t = sj.at("N_t").get<std::size_t>();
    if (sj.contains("K")) e.K = sj.at("K").get<std::size_t>();
    if (sj.contains("N_rf")) e.N_rf = sj.at("N_rf").get<std::size_t>();
    if (sj.contains("M")) e.M = sj.at("M").get<std::size_t>();
    if (sj.contains("has_eve")) e.has_eve = sj.at("has_eve").get<bool>();
    if (sj.contains("has_g")) e.has_g = sj.at("has_g").get<bool>();
    if (sj.contains("has_gsi")) e.has_gsi = sj.at("has_gsi").get<bool>();
    if (sj.contains("has_epsilon")) e.has_epsilon = sj.at("has_epsilon").get<bool>();
    if (sj.contains("has_symbols")) e.has_symbols = sj.at("has_symbols").get<bool>();
    if (sj.contains("constraints")) {
      e.constraints.clear();
      for (const auto& cj : sj.at("constraints")) {
        ConstraintSpec spec;
        spec.kind = constraint_kind_from_string(cj.at("kind").get<std::string>());
        for (const auto& [k, v] : cj.at("params").items()) {
          spec.params[k] = v.get<std::string>();
        }
        if (cj.contains("per_user")) spec.per_user = cj.at("per_user").get<bool>();
        e.constraints.push_back(std::move(spec));
      }
    }
    entries_[id] = std::move(e);
  }
}

}  // namespace precoding
