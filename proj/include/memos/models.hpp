#pragma once

#include <cmath>
#include <string>

#include "memos/errors.hpp"
#include "memos/params.hpp"
#include "memos/rng.hpp"

namespace memos {

enum class ModelKind { Team, Vteam, KnowmDeterministic, KnowmStochastic };

const char* model_name(ModelKind k);
ModelKind model_from_string(const std::string& s);

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

namespace detail {
// exponents are small integers in practice; avoid pow in the hot loop
inline double power_law(double base, double alpha) {
  if (alpha == 3.0) return base * base * base;
  if (alpha == 2.0) return base * base;
  if (alpha == 1.0) return base;
  return std::pow(base, alpha);
}
}  // namespace detail

// Current-threshold state equation. Zero inside the dead zone; threshold
// boundaries belong to the dead zone (strict inequalities). No window
// function: the state is hard-clamped to [0,1] by the Euler step instead.
inline double dwdt_team(double /*w*/, double current, const TeamParams& p) {
  if (current > p.i_off) return p.k_off * detail::power_law(current / p.i_off - 1.0, p.alpha_off);
  if (current < p.i_on) return p.k_on * detail::power_law(current / p.i_on - 1.0, p.alpha_on);
  return 0.0;
}

// Voltage-threshold variant with the same polarity convention.
inline double dwdt_vteam(double /*w*/, double voltage, const VteamParams& p) {
  if (voltage > p.v_off) return p.k_off * detail::power_law(voltage / p.v_off - 1.0, p.alpha_off);
  if (voltage < p.v_on) return p.k_on * detail::power_law(voltage / p.v_on - 1.0, p.alpha_on);
  return 0.0;
}

// Mean-field metastable switch update; returns the next state (unclamped).
inline double knowm_mean_step(double w, double voltage, double dt, const KnowmParams& p) {
  double up = (1.0 - w) * logistic((voltage - p.v_on) / p.v_t);
  double down = w * logistic(-(voltage + p.v_off) / p.v_t);
  return w + dt / p.t_c * (up - down);
}

// Samples the two transition counts over the switch population.
double knowm_stochastic_step(double w, double voltage, double dt, const KnowmParams& p,
                             Splitmix64& rng);

// Linear state-to-resistance map: w = 0 is fully OFF (high resistance),
// w = 1 fully ON.
inline double memristance(double w, double r_on, double r_off) {
  return r_off + w * (r_on - r_off);
}
double memristance(double w, const ModelParams& p, ModelKind kind);

// One device: normalized state plus the resolved constants of its model.
// Values are plain members so circuits can hold devices by value and copy
// them freely; an instance is owned by one circuit at a time.
class MemristorDevice {
 public:
  MemristorDevice(ModelKind kind, const ModelParams& p, uint64_t seed = 0);

  void reset() { w_ = 0.5; }
  double state() const { return w_; }
  double resistance() const { return memristance(w_, r_on_, r_off_); }
  double conductance() const { return 1.0 / resistance(); }
  ModelKind kind() const { return kind_; }

  struct StepResult {
    double w;
    double current;  // A, sign of the applied voltage
    double energy;   // J, always >= 0 (resistive dissipation)
  };

  // Explicit Euler step under a constant applied voltage for dt seconds.
  // TEAM is driven by the resulting current, VTEAM/Knowm by the voltage.
  StepResult step(double v_applied, double dt) {
    double r = memristance(w_, r_on_, r_off_);
    double current = v_applied / r;
    double next;
    switch (kind_) {
      case ModelKind::Team: next = w_ + dt * dwdt_team(w_, current, team_); break;
      case ModelKind::Vteam: next = w_ + dt * dwdt_vteam(w_, v_applied, vteam_); break;
      case ModelKind::KnowmDeterministic:
        next = knowm_mean_step(w_, v_applied, dt, knowm_);
        break;
      case ModelKind::KnowmStochastic:
      default: next = knowm_stochastic_step(w_, v_applied, dt, knowm_, rng_); break;
    }
    if (!std::isfinite(next))
      throw NonFiniteState("device state diverged (dt too large or bad parameters)");
    w_ = next < 0.0 ? 0.0 : (next > 1.0 ? 1.0 : next);
    return {w_, current, v_applied * current * dt};
  }

 private:
  ModelKind kind_;
  double w_ = 0.5;
  double r_on_, r_off_;
  TeamParams team_;
  VteamParams vteam_;
  KnowmParams knowm_;
  Splitmix64 rng_;
};

}  // namespace memos
