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
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "precoding/complex_matrix.hpp"

namespace precoding {

struct ArchitectureMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ObjectiveKind { PowerMin, CiMarginMax, SecrecyMaxMin, SumRateMax };

inline std::string to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::PowerMin: return "PowerMin";
    case ObjectiveKind::CiMarginMax: return "CiMarginMax";
    case ObjectiveKind::SecrecyMaxMin: return "SecrecyMaxMin";
    case ObjectiveKind::SumRateMax: return "SumRateMax";
  }
  throw std::logic_error("unreachable");
}

inline ObjectiveKind objective_from_string(const std::string& s) {
  if (s == "PowerMin") return ObjectiveKind::PowerMin;
  if (s == "CiMarginMax") return ObjectiveKind::CiMarginMax;
  if (s == "SecrecyMaxMin") return ObjectiveKind::SecrecyMaxMin;
  if (s == "SumRateMax") return ObjectiveKind::SumRateMax;
  throw std::invalid_argument("unknown ObjectiveKind: " + s);
}

enum class ConstraintKind {
  TotalPower,
  PerUserSinr,
  PerUserRate,
  InterferenceTemperature,
  RobustInterferenceTemperature,
  SelfInterference,
  UnitModulus,
  OneBit,
  CiMargin,
  RobustCiMargin,
  EavesdropperRate,
};

inline std::string to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::TotalPower: return "TotalPower";
    case ConstraintKind::PerUserSinr: return "PerUserSinr";
    case ConstraintKind::PerUserRate: return "PerUserRate";
    case ConstraintKind::InterferenceTemperature: return "InterferenceTemperature";
    case ConstraintKind::RobustInterferenceTemperature: return "RobustInterferenceTemperature";
    case ConstraintKind::SelfInterference: return "SelfInterference";
    case ConstraintKind::UnitModulus: return "UnitModulus";
    case ConstraintKind::OneBit: return "OneBit";
    case ConstraintKind::CiMargin: return "CiMargin";
    case ConstraintKind::RobustCiMargin: return "RobustCiMargin";
    case ConstraintKind::EavesdropperRate: return "EavesdropperRate";
  }
  throw std::logic_error("unreachable");
}

inline ConstraintKind constraint_kind_from_string(const std::string& s) {
  static const std::map<std::string, ConstraintKind> table = {
      {"TotalPower", ConstraintKind::TotalPower},
      {"PerUserSinr", ConstraintKind::PerUserSinr},
      {"PerUserRate", ConstraintKind::PerUserRate},
      {"InterferenceTemperature", ConstraintKind::InterferenceTemperature},
      {"RobustInterferenceTemperature", ConstraintKind::RobustInterferenceTemperature},
      {"SelfInterference", ConstraintKind::SelfInterference},
      {"UnitModulus", ConstraintKind::UnitModulus},
      {"OneBit", ConstraintKind::OneBit},
      {"CiMargin", ConstraintKind::CiMargin},
      {"RobustCiMargin", ConstraintKind::RobustCiMargin},
      {"EavesdropperRate", ConstraintKind::EavesdropperRate},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown ConstraintKind: " + s);
  return it->second;
}

// One operational constraint with its named scalar parameters. Parameter keys
// per kind (all values must be finite, budgets and targets nonnegative):
//   TotalPower                      p_max [W]
//   PerUserSinr                     gamma, user
//   PerUserRate                     rate, user  [bps/Hz]
//   InterferenceTemperature         i_th [W]
//   RobustInterferenceTemperature   i_th [W], epsilon
//   SelfInterference                eta [W]
//   UnitModulus                     p_max [W]   (amplitude sqrt(p_max/N_t))
//   OneBit                          p_max [W]   (alphabet sqrt(p_max/2N_t)*{±1±j})
//   CiMargin                        delta       (min margin target)
//   RobustCiMargin                  delta, epsilon
//   EavesdropperRate                cap [bps/Hz]
struct Constraint {
  ConstraintKind kind;
  std::map<std::string, double> parameters;

  Constraint(ConstraintKind k, std::map<std::string, double> params)
      : kind(k), parameters(std::move(params)) {
    validate();
  }

  double param(const std::string& name) const {
    auto it = parameters.find(name);
    if (it == parameters.end()) {
      throw std::invalid_argument("Constraint " + to_string(kind) +
                                  ": missing parameter " + name);
    }
    return it->second;
  }

  bool operator==(const Constraint& o) const {
    return kind == o.kind && parameters == o.parameters;
  }

 private:
  void validate() const {
    static const std::map<ConstraintKind, std::vector<std::string>> required = {
        {ConstraintKind::TotalPower, {"p_max"}},
        {ConstraintKind::PerUserSinr, {"gamma", "user"}},
        {ConstraintKind::PerUserRate, {"rate", "user"}},
        {ConstraintKind::InterferenceTemperature, {"i_th"}},
        {ConstraintKind::RobustInterferenceTemperature, {"i_th", "epsilon"}},
        {ConstraintKind::SelfInterference, {"eta"}},
        {ConstraintKind::UnitModulus, {"p_max"}},
        {ConstraintKind::OneBit, {"p_max"}},
        {ConstraintKind::CiMargin, {"delta"}},
        {ConstraintKind::RobustCiMargin, {"delta", "epsilon"}},
        {ConstraintKind::EavesdropperRate, {"cap"}},
    };
    for (const auto& name : required.at(kind)) {
      const double v = param(name);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("Constraint " + to_string(kind) +
                                    ": non-finite parameter " + name);
      }
      // delta may legitimately be zero; budgets/targets must not be negative.
      if (v < 0.0 && name != "delta") {
        throw std::invalid_argument("Constraint " + to_string(kind) +
                                    ": negative parameter " + name);
      }
    }
    for (const auto& [name, v] : parameters) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("Constraint: non-finite parameter " + name);
      }
    }
  }
};

struct PowerBudget {
  double p_max;  // W
  explicit PowerBudget(double p) : p_max(p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("PowerBudget: p_max must be positive");
    }
  }
};

// ---------------------------------------------------------------------------
// Solution variants

// Linear beamformers, one column per user (N_t x K).
struct BeamformerMatrix {
  ComplexMatrix W;
  explicit BeamformerMatrix(ComplexMatrix w) : W(std::move(w)) {
    if (W.rows() == 0 || W.cols() == 0) {
      throw std::invalid_argument("BeamformerMatrix: empty matrix");
    }
  }
};

// Constant-envelope transmit phases; implied signal sqrt(p_max/N_t)*e^{j theta_n}.
struct PhaseVector {
  std::vector<double> theta;  // radians
  double p_max;
  PhaseVector(std::vector<double> th, double p)
      : theta(std::move(th)), p_max(p) {
    if (theta.empty()) throw std::invalid_argument("PhaseVector: empty");
    for (double t : theta) {
      if (!std::isfinite(t)) throw std::invalid_argument("PhaseVector: non-finite phase");
    }
    if (!(p > 0.0)) throw std::invalid_argument("PhaseVector: p_max must be positive");
  }

  ComplexMatrix signal() const {
    const double amp = std::sqrt(p_max / static_cast<double>(theta.size()));
    std::vector<cplx> x(theta.size());
    for (std::size_t n = 0; n < theta.size(); ++n) {
      x[n] = amp * cplx{std::cos(theta[n]), std::sin(theta[n])};
    }
    return ComplexMatrix(theta.size(), 1, std::move(x));
  }
};

// 1-bit DAC transmit vector; entries restricted to sqrt(p_max/2N_t)*{±1±j}.
struct QuantizedVector {
  ComplexMatrix x;  // N_t x 1
  double p_max;
  QuantizedVector(ComplexMatrix v, double p) : x(std::move(v)), p_max(p) {
    if (x.cols() != 1 || x.rows() == 0) {
      throw std::invalid_argument("QuantizedVector: expects a column vector");
    }
    const double a = std::sqrt(p_max / (2.0 * static_cast<double>(x.rows())));
    for (std::size_t n = 0; n < x.rows(); ++n) {
      const cplx v_n = x(n, 0);
      if (std::abs(std::abs(v_n.real()) - a) > 1e-12 * a ||
          std::abs(std::abs(v_n.imag()) - a) > 1e-12 * a) {
        throw std::invalid_argument("QuantizedVector: entry off the 4-point alphabet");
      }
    }
  }
};

// Hybrid analog/digital pair: F_RF (N_t x N_rf, unit-modulus entries) and
// F_BB (N_rf x K).
struct HybridPair {
  ComplexMatrix F_RF;
  ComplexMatrix F_BB;
  HybridPair(ComplexMatrix rf, ComplexMatrix bb)
      : F_RF(std::move(rf)), F_BB(std::move(bb)) {
    if (F_RF.cols() != F_BB.rows()) {
      throw std::invalid_argument("HybridPair: F_RF cols != F_BB rows");
    }
    for (const cplx& v : F_RF.entries()) {
      if (std::abs(std::abs(v) - 1.0) > 1e-12) {
        throw std::invalid_argument("HybridPair: F_RF entry not unit modulus");
      }
    }
  }
};

using Solution = std::variant<BeamformerMatrix, PhaseVector, QuantizedVector, HybridPair>;

inline std::string solution_tag(const Solution& s) {
  switch (s.index()) {
    case 0: return "BeamformerMatrix";
    case 1: return "PhaseVector";
    case 2: return "QuantizedVector";
    case 3: return "HybridPair";
  }
  throw std::logic_error("unreachable");
}

// Transmit power of a solution in W. For hybrid pairs this is the Frobenius
// power of the cascade F_RF * F_BB.
inline double solution_power(const Solution& s) {
  if (const auto* bm = std::get_if<BeamformerMatrix>(&s)) return bm->W.squared_norm();
  if (const auto* pv = std::get_if<PhaseVector>(&s)) return pv->p_max;
  if (const auto* qv = std::get_if<QuantizedVector>(&s)) return qv->x.squared_norm();
  const auto& hp = std::get<HybridPair>(s);
  return (hp.F_RF * hp.F_BB).squared_norm();
}

}  // namespace precoding
