#include "memos/params.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "memos/errors.hpp"
#include "memos/util.hpp"

namespace memos {

ModelParams default_params() {
  ModelParams p;
  p.r_on = 100.0;
  p.r_off = 10000.0;
  // rate constants calibrated so the cut-off bands land at GHz (TEAM/VTEAM)
  // vs tens of kHz (Knowm); see README for the calibration sweep
  p.team = {-2.0e5, 2.0e5, 3.0, 3.0, -2.0e-5, 2.0e-5};
  p.vteam = {-1.0e9, 1.0e9, 3.0, 3.0, -0.4, 0.4};
  p.knowm = {2.0e-4, 2.0e-6, 0.27, 0.27, 3.0e-5, 0.026, 1000};
  return p;
}

void validate_params(const ModelParams& p) {
  auto bad = [](const std::string& why) { throw IoFailure("invalid parameters: " + why); };
  if (!(p.r_off > p.r_on && p.r_on > 0)) bad("need r_off > r_on > 0");
  if (!(p.team.i_on < 0 && 0 < p.team.i_off)) bad("TEAM thresholds need i_on < 0 < i_off");
  if (!(p.team.k_on < 0 && 0 < p.team.k_off)) bad("TEAM rates need k_on < 0 < k_off");
  if (!(p.vteam.v_on < 0 && 0 < p.vteam.v_off)) bad("VTEAM thresholds need v_on < 0 < v_off");
  if (!(p.vteam.k_on < 0 && 0 < p.vteam.k_off)) bad("VTEAM rates need k_on < 0 < k_off");
  if (!(p.knowm.t_c > 0)) bad("Knowm t_c must be positive");
  if (!(p.knowm.v_t > 0)) bad("Knowm v_t must be positive");
  if (!(p.knowm.g_on > p.knowm.g_off && p.knowm.g_off > 0)) bad("need g_on > g_off > 0");
  if (p.knowm.n_mss < 1) bad("n_mss must be at least 1");
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string serialize_params(const ModelParams& p) {
  std::ostringstream os;
  os << "# memristor device parameters (SI units)\n";
  os << "[shared]\n";
  os << "r_on = " << fmt(p.r_on) << "\n";
  os << "r_off = " << fmt(p.r_off) << "\n";
  os << "[team]\n";
  os << "k_on = " << fmt(p.team.k_on) << "\n";
  os << "k_off = " << fmt(p.team.k_off) << "\n";
  os << "alpha_on = " << fmt(p.team.alpha_on) << "\n";
  os << "alpha_off = " << fmt(p.team.alpha_off) << "\n";
  os << "i_on = " << fmt(p.team.i_on) << "\n";
  os << "i_off = " << fmt(p.team.i_off) << "\n";
  os << "[vteam]\n";
  os << "k_on = " << fmt(p.vteam.k_on) << "\n";
  os << "k_off = " << fmt(p.vteam.k_off) << "\n";
  os << "alpha_on = " << fmt(p.vteam.alpha_on) << "\n";
  os << "alpha_off = " << fmt(p.vteam.alpha_off) << "\n";
  os << "v_on = " << fmt(p.vteam.v_on) << "\n";
  os << "v_off = " << fmt(p.vteam.v_off) << "\n";
  os << "[knowm]\n";
  os << "g_on = " << fmt(p.knowm.g_on) << "\n";
  os << "g_off = " << fmt(p.knowm.g_off) << "\n";
  os << "v_on = " << fmt(p.knowm.v_on) << "\n";
  os << "v_off = " << fmt(p.knowm.v_off) << "\n";
  os << "t_c = " << fmt(p.knowm.t_c) << "\n";
  os << "v_t = " << fmt(p.knowm.v_t) << "\n";
  os << "n_mss = " << p.knowm.n_mss << "\n";
  return os.str();
}

ModelParams parse_params(std::istream& is) {
  ModelParams p = default_params();
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw IoFailure("parameter file line " + std::to_string(lineno) + ": " + why);
    };
    if (body.front() == '[') {
      if (body.back() != ']') fail("unterminated section header");
      section = body.substr(1, body.size() - 2);
      if (section != "shared" && section != "team" && section != "vteam" && section != "knowm")
        fail("unknown section '" + section + "'");
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = trim(body.substr(0, eq));
    std::string val = trim(body.substr(eq + 1));
    double num = 0;
    try {
      num = std::stod(val);
    } catch (...) {
      fail("bad numeric value '" + val + "'");
    }
    bool known = true;
    if (section == "shared") {
      if (key == "r_on") p.r_on = num;
      else if (key == "r_off") p.r_off = num;
      else known = false;
    } else if (section == "team") {
      if (key == "k_on") p.team.k_on = num;
      else if (key == "k_off") p.team.k_off = num;
      else if (key == "alpha_on") p.team.alpha_on = num;
      else if (key == "alpha_off") p.team.alpha_off = num;
      else if (key == "i_on") p.team.i_on = num;
      else if (key == "i_off") p.team.i_off = num;
      else known = false;
    } else if (section == "vteam") {
      if (key == "k_on") p.vteam.k_on = num;
      else if (key == "k_off") p.vteam.k_off = num;
      else if (key == "alpha_on") p.vteam.alpha_on = num;
      else if (key == "alpha_off") p.vteam.alpha_off = num;
      else if (key == "v_on") p.vteam.v_on = num;
      else if (key == "v_off") p.vteam.v_off = num;
      else known = false;
    } else if (section == "knowm") {
      if (key == "g_on") p.knowm.g_on = num;
      else if (key == "g_off") p.knowm.g_off = num;
      else if (key == "v_on") p.knowm.v_on = num;
      else if (key == "v_off") p.knowm.v_off = num;
      else if (key == "t_c") p.knowm.t_c = num;
      else if (key == "v_t") p.knowm.v_t = num;
      else if (key == "n_mss") p.knowm.n_mss = static_cast<int>(num);
      else known = false;
    } else {
      fail("key outside any section");
    }
    if (!known) fail("unknown key '" + key + "' in section [" + section + "]");
  }
  validate_params(p);
  return p;
}

ModelParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open parameter file " + path);
  return parse_params(in);
}

uint64_t params_hash(const ModelParams& p) { return fnv1a(serialize_params(p)); }

}  // namespace memos
