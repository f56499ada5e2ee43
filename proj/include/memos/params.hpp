#pragma once

#include <iosfwd>
#include <string>

namespace memos {

// All units SI. Rate constants are normalized to the unit state interval
// (w in [0,1]), so k values are 1/s. Sign conventions: positive drive moves
// w toward 1 (low resistance), so k_off > 0 acts above the positive
// threshold and k_on < 0 below the negative one.
struct TeamParams {
  double k_on;       // 1/s, negative
  double k_off;      // 1/s, positive
  double alpha_on;
  double alpha_off;
  double i_on;       // A, negative threshold
  double i_off;      // A, positive threshold
};

struct VteamParams {
  double k_on;       // 1/s, negative
  double k_off;      // 1/s, positive
  double alpha_on;
  double alpha_off;
  double v_on;       // V, negative threshold
  double v_off;      // V, positive threshold
};

// Mean metastable-switch model; v_on/v_off are positive barrier magnitudes
// for the up and down transition, v_t the thermal voltage, t_c the
// characteristic switching time. n_mss is the switch population of the
// stochastic variant.
struct KnowmParams {
  double g_on;   // S
  double g_off;  // S
  double v_on;   // V
  double v_off;  // V
  double t_c;    // s
  double v_t;    // V
  int n_mss;
};

struct ModelParams {
  double r_on;   // ohm, shared linear memristance map (TEAM/VTEAM)
  double r_off;  // ohm
  TeamParams team;
  VteamParams vteam;
  KnowmParams knowm;
};

// Calibrated defaults; the same values ship in params/default.params.
ModelParams default_params();

void validate_params(const ModelParams& p);  // throws IoFailure on bad conventions

ModelParams parse_params(std::istream& is);            // key=value with [sections]
ModelParams load_params(const std::string& path);      // IoFailure
std::string serialize_params(const ModelParams& p);    // canonical text form
uint64_t params_hash(const ModelParams& p);            // FNV-1a of the canonical form

}  // namespace memos
