#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "memos/models.hpp"
#include "memos/params.hpp"

using namespace memos;

TEST_CASE("team state equation") {
  TeamParams p = default_params().team;

  // dead zone, boundaries included
  CHECK(dwdt_team(0.5, 0.0, p) == 0.0);
  CHECK(dwdt_team(0.5, p.i_off, p) == 0.0);
  CHECK(dwdt_team(0.5, p.i_on, p) == 0.0);
  CHECK(dwdt_team(0.5, 0.99 * p.i_off, p) == 0.0);
  CHECK(dwdt_team(0.5, 0.99 * p.i_on, p) == 0.0);

  // at i = 2*i_off the rate is exactly k_off
  CHECK(dwdt_team(0.5, 2.0 * p.i_off, p) == doctest::Approx(p.k_off));
  CHECK(dwdt_team(0.5, 2.0 * p.i_on, p) == doctest::Approx(p.k_on));
  // positive drive moves toward 1, negative toward 0
  CHECK(dwdt_team(0.5, 3.0 * p.i_off, p) > 0);
  CHECK(dwdt_team(0.5, 3.0 * p.i_on, p) < 0);
}

TEST_CASE("vteam state equation") {
  VteamParams p = default_params().vteam;
  CHECK(dwdt_vteam(0.5, 0.0, p) == 0.0);
  CHECK(dwdt_vteam(0.5, 0.5 * p.v_off, p) == 0.0);
  CHECK(dwdt_vteam(0.5, 0.5 * p.v_on, p) == 0.0);
  CHECK(dwdt_vteam(0.5, 2.0 * p.v_off, p) == doctest::Approx(p.k_off));
  CHECK(dwdt_vteam(0.5, 2.0 * p.v_on, p) == doctest::Approx(p.k_on));
}

TEST_CASE("vteam switching time scales inversely with k_off") {
  ModelParams params = default_params();
  auto time_to_switch = [&](double k_off) {
    ModelParams p = params;
    p.vteam.k_off = k_off;
    MemristorDevice dev(ModelKind::Vteam, p);
    double v = 2.0 * p.vteam.v_off;  // constant super-threshold drive
    double dt = 1.0 / k_off / 50.0;
    double t = 0;
    while (dev.state() < 0.99) {
      dev.step(v, dt);
      t += dt;
      REQUIRE(t < 1.0);  // must reach 0.99 in finite time
    }
    return t;
  };
  double t1 = time_to_switch(1e9);
  double t2 = time_to_switch(2e9);
  CHECK(t1 / t2 == doctest::Approx(2.0).epsilon(0.10));
}

TEST_CASE("knowm mean-field behaviour") {
  KnowmParams p = default_params().knowm;

  // symmetric barriers: no drift at the midpoint without bias
  double w = 0.5;
  double drift = 0;
  double dt = p.t_c / 100.0;
  for (int i = 0; i < 100; ++i) {  // one t_c total
    double next = knowm_mean_step(w, 0.0, dt, p);
    drift += next - w;
    w = next;
  }
  CHECK(std::abs(drift) < 1e-3);

  // strong positive drive saturates within ten characteristic times
  MemristorDevice dev(ModelKind::KnowmDeterministic, default_params());
  double v = p.v_on + 20.0 * p.v_t;
  for (int i = 0; i < 1000; ++i) dev.step(v, p.t_c / 100.0);
  CHECK(dev.state() > 0.99);

  // strong negative drive empties it
  MemristorDevice dev2(ModelKind::KnowmDeterministic, default_params());
  for (int i = 0; i < 1000; ++i) dev2.step(-(p.v_off + 20.0 * p.v_t), p.t_c / 100.0);
  CHECK(dev2.state() < 0.01);
}

TEST_CASE("knowm stochastic determinism") {
  ModelParams params = default_params();
  auto run = [&](uint64_t seed) {
    MemristorDevice dev(ModelKind::KnowmStochastic, params, seed);
    std::vector<double> traj;
    for (int i = 0; i < 200; ++i)
      traj.push_back(dev.step(0.5, params.knowm.t_c / 20.0).w);
    return traj;
  };
  CHECK(run(42) == run(42));
  CHECK(run(42) != run(43));
}

TEST_CASE("memristance map") {
  ModelParams p = default_params();
  CHECK(memristance(0.0, p.r_on, p.r_off) == p.r_off);
  CHECK(memristance(1.0, p.r_on, p.r_off) == p.r_on);
  CHECK(memristance(0.5, p.r_on, p.r_off) == doctest::Approx((p.r_on + p.r_off) / 2.0));
  // monotone decreasing in w
  CHECK(memristance(0.3, p.r_on, p.r_off) > memristance(0.7, p.r_on, p.r_off));

  // knowm devices use their own conductance endpoints
  CHECK(memristance(1.0, p, ModelKind::KnowmDeterministic) ==
        doctest::Approx(1.0 / p.knowm.g_on));
  CHECK(memristance(0.0, p, ModelKind::KnowmDeterministic) ==
        doctest::Approx(1.0 / p.knowm.g_off));

  MemristorDevice dev(ModelKind::Team, p);
  CHECK(dev.conductance() == doctest::Approx(1.0 / dev.resistance()).epsilon(1e-15));
}

TEST_CASE("euler step basics") {
  ModelParams p = default_params();
  MemristorDevice dev(ModelKind::Team, p);

  // zero volts: no state change, no energy
  auto r = dev.step(0.0, 1e-9);
  CHECK(r.w == 0.5);
  CHECK(r.energy == 0.0);
  CHECK(r.current == 0.0);

  // energy is the sum of v*i*dt and stays non-negative under any drive
  MemristorDevice d2(ModelKind::Vteam, p);
  Splitmix64 rng(5);
  double total = 0;
  for (int i = 0; i < 1000; ++i) {
    double v = (rng.next_unit() - 0.5) * 8.0;
    auto s = d2.step(v, 1e-10);
    CHECK(s.energy >= 0.0);
    CHECK(s.w >= 0.0);
    CHECK(s.w <= 1.0);
    total += s.energy;
  }
  CHECK(total > 0.0);
}

TEST_CASE("reset") {
  ModelParams p = default_params();
  MemristorDevice dev(ModelKind::Vteam, p);
  for (int i = 0; i < 100; ++i) dev.step(2.0, 1e-10);
  CHECK(dev.state() > 0.5);
  dev.reset();
  CHECK(dev.state() == 0.5);
  dev.reset();
  CHECK(dev.state() == 0.5);
  CHECK(dev.resistance() == doctest::Approx((p.r_on + p.r_off) / 2.0));
}

TEST_CASE("dead zones leave the state bit-for-bit unchanged") {
  ModelParams p = default_params();
  MemristorDevice team(ModelKind::Team, p);
  MemristorDevice vteam(ModelKind::Vteam, p);
  // sub-threshold drives: currents/voltages inside the dead zone
  double v_small = 0.9 * p.team.i_off * memristance(0.5, p.r_on, p.r_off);
  for (int i = 0; i < 100; ++i) {
    CHECK(team.step(v_small, 1e-9).w == 0.5);
    CHECK(vteam.step(0.9 * p.vteam.v_off, 1e-9).w == 0.5);
  }
}

TEST_CASE("monotone trajectory under constant super-threshold drive") {
  ModelParams p = default_params();
  for (ModelKind kind : {ModelKind::Team, ModelKind::Vteam, ModelKind::KnowmDeterministic}) {
    MemristorDevice dev(kind, p);
    double dt = kind == ModelKind::KnowmDeterministic ? p.knowm.t_c / 100.0 : 1e-11;
    double prev = dev.state();
    for (int i = 0; i < 500; ++i) {
      double w = dev.step(3.0, dt).w;
      CHECK(w >= prev);
      prev = w;
    }
  }
}

TEST_CASE("first-order euler convergence") {
  // knowm mean-field has state-dependent rates, so the error is O(dt)
  ModelParams p = default_params();
  double duration = 2.0 * p.knowm.t_c;
  double v = p.knowm.v_on + 1.0 * p.knowm.v_t;  // mid-strength drive
  auto final_w = [&](int steps) {
    MemristorDevice dev(ModelKind::KnowmDeterministic, p);
    double dt = duration / steps;
    for (int i = 0; i < steps; ++i) dev.step(v, dt);
    return dev.state();
  };
  double w1 = final_w(50), w2 = final_w(100), w4 = final_w(200);
  CHECK(std::abs(w1 - w2) / std::abs(w2 - w4) == doctest::Approx(2.0).epsilon(0.25));
  // halving dt changes the final state by less than 1%
  CHECK(std::abs(w1 - w2) / w2 < 0.01);
}

TEST_CASE("non-finite states are reported") {
  ModelParams p = default_params();
  p.team.k_off = 1e308;
  p.team.alpha_off = 8.0;
  MemristorDevice dev(ModelKind::Team, p);
  CHECK_THROWS_AS(dev.step(300.0, 1e30), NonFiniteState);
}

TEST_CASE("parameter files") {
  ModelParams p = default_params();
  std::string text = serialize_params(p);
  std::istringstream in(text);
  ModelParams q = parse_params(in);
  CHECK(serialize_params(q) == text);
  CHECK(params_hash(q) == params_hash(p));

  // overrides change the hash
  std::istringstream in2("[team]\nk_off = 1e7\n");
  ModelParams r = parse_params(in2);
  CHECK(r.team.k_off == 1e7);
  CHECK(params_hash(r) != params_hash(p));

  std::istringstream bad1("[team]\nbogus = 3\n");
  CHECK_THROWS_AS(parse_params(bad1), IoFailure);
  std::istringstream bad2("r_on = 5\n");  // key before any section
  CHECK_THROWS_AS(parse_params(bad2), IoFailure);
  std::istringstream bad3("[shared]\nr_on = -4\nr_off = 3\n");
  CHECK_THROWS_AS(parse_params(bad3), IoFailure);
}
