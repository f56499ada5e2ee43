#include "memos/models.hpp"

namespace memos {

const char* model_name(ModelKind k) {
  switch (k) {
    case ModelKind::Team: return "team";
    case ModelKind::Vteam: return "vteam";
    case ModelKind::KnowmDeterministic: return "knowm";
    case ModelKind::KnowmStochastic: return "knowm-stochastic";
  }
  return "?";
}

ModelKind model_from_string(const std::string& s) {
  if (s == "team") return ModelKind::Team;
  if (s == "vteam") return ModelKind::Vteam;
  if (s == "knowm") return ModelKind::KnowmDeterministic;
  if (s == "knowm-stochastic") return ModelKind::KnowmStochastic;
  throw IoFailure("unknown model '" + s + "'");
}

double knowm_stochastic_step(double w, double voltage, double dt, const KnowmParams& p,
                             Splitmix64& rng) {
  double p_up = dt / p.t_c * logistic((voltage - p.v_on) / p.v_t);
  double p_down = dt / p.t_c * logistic(-(voltage + p.v_off) / p.v_t);
  p_up = p_up > 1.0 ? 1.0 : p_up;
  p_down = p_down > 1.0 ? 1.0 : p_down;
  int off_pop = static_cast<int>(std::lround((1.0 - w) * p.n_mss));
  int on_pop = p.n_mss - off_pop;
  int up = 0, down = 0;
  for (int i = 0; i < off_pop; ++i)
    if (rng.next_unit() < p_up) ++up;
  for (int i = 0; i < on_pop; ++i)
    if (rng.next_unit() < p_down) ++down;
  return w + static_cast<double>(up - down) / p.n_mss;
}

double memristance(double w, const ModelParams& p, ModelKind kind) {
  if (kind == ModelKind::KnowmDeterministic || kind == ModelKind::KnowmStochastic)
    return memristance(w, 1.0 / p.knowm.g_on, 1.0 / p.knowm.g_off);
  return memristance(w, p.r_on, p.r_off);
}

MemristorDevice::MemristorDevice(ModelKind kind, const ModelParams& p, uint64_t seed)
    : kind_(kind), team_(p.team), vteam_(p.vteam), knowm_(p.knowm), rng_(seed) {
  if (kind == ModelKind::KnowmDeterministic || kind == ModelKind::KnowmStochastic) {
    r_on_ = 1.0 / p.knowm.g_on;
    r_off_ = 1.0 / p.knowm.g_off;
  } else {
    r_on_ = p.r_on;
    r_off_ = p.r_off;
  }
}

}  // namespace memos
