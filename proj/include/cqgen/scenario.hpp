#pragma once

#include <cstdint>
#include <vector>

#include "cqgen/propagation.hpp"
#include "cqgen/rng.hpp"

namespace cqgen::scenario {

using propagation::Aoi;
using propagation::Environment;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

struct BaseStation {
    int id = 0;
    Vec2 position;
    double height_m = 30.0;
    double fc_hz = 2.6e9;
    double pt_dbm = 43.0;
};

// First-order Gauss-Markov log-normal shadowing, rho = exp(-1/correlation_steps).
struct ShadowingParams {
    double sigma_db = 8.0;
    double correlation_steps = 10.0;
};

ShadowingParams default_shadowing(Aoi aoi);

struct Scenario {
    Environment env;
    std::vector<BaseStation> stations;
    std::vector<std::vector<Vec2>> users;  // M trajectories of T positions each
    double noise_dbm = -104.0;
    double ue_height_m = 1.5;
    ShadowingParams shadowing;
};

void validate(const Scenario& s);

enum class Layout { Uniform, Hex };

struct ScenarioParams {
    Environment env;
    Layout layout = Layout::Hex;
    int n_stations = 7;
    int n_users = 100;
    int n_steps = 24;
    double box_m = 3000.0;       // square AOI side length
    double isd_m = 900.0;        // hex inter-site distance
    double bs_height_min_m = 20.0;
    double bs_height_max_m = 40.0;
    double pt_min_dbm = 40.0;
    double pt_max_dbm = 46.0;
    std::vector<double> frequencies_hz = {700.0e6, 2.6e9, 4.9e9};
    double noise_dbm = -104.0;
    double ue_height_m = 1.5;
    double speed_min_mps = 0.5;
    double speed_max_mps = 15.0;
    ShadowingParams shadowing{-1.0, -1.0};  // negative -> per-AOI defaults
};

void validate(const ScenarioParams& p);

// Deterministic given seed. Station frequencies cycle through the configured
// set so co-channel neighbours exist whenever N exceeds the set size.
Scenario generate_scenario(const ScenarioParams& params, std::uint64_t seed);

// Random-waypoint walk sampled once per time step, confined to the box.
std::vector<Vec2> generate_trajectory(const ScenarioParams& params, Rng& rng);

// Full per-link shadowing gain series g[0..steps), zero-mean, stationary
// stdev sigma_db.
std::vector<double> shadowing_series(const ShadowingParams& sp, int steps, Rng& rng);

// PR for one link at one step: deterministic link budget plus the stochastic
// environment gain.
double link_pr_dbm(const Scenario& s, const BaseStation& bs, const Vec2& user_pos, double gain_db);

struct ServingSelection {
    double rsrp_dbm;
    int serving_index;
};

// Highest received power wins; ties break to the lowest index.
ServingSelection serving_selection(const std::vector<double>& pr_dbm);

// Co-channel interference, linear domain. Frequency equality is tested after
// rounding to 1 kHz.
double interference_power_w(const std::vector<double>& pr_w, const std::vector<double>& freqs_hz,
                            int serving_index);

// Linear SINR = rsrp / (interference + noise).
double sinr(double rsrp_w, double interference_w, double noise_w);

// The per-user condition quintuple over T steps, tracking the serving link.
struct ConditionSeries {
    std::vector<double> d_m;
    std::vector<double> h_bs_m;
    std::vector<double> f_hz;
    std::vector<double> pt_dbm;
    Aoi aoi = Aoi::Urban;
};

void validate(const ConditionSeries& c);

struct TargetSeries {
    std::vector<double> rsrp_dbm;
    std::vector<double> sinr_db;
};

struct DatasetRecord {
    int user_id = 0;
    ConditionSeries conditions;
    TargetSeries real;
    std::vector<double> theo_rsrp_dbm;
    std::vector<int> serving_ids;
};

// Options for evaluating the physics label from a condition series alone.
struct TheoreticalOptions {
    propagation::CitySize city_size = propagation::CitySize::Big;
    double hata_k = 35.94;
    double ue_height_m = 1.5;
};

// Deterministic per-step received power from the quintuple: zero antenna
// gains, zero environment gain.
std::vector<double> theoretical_rsrp(const ConditionSeries& conditions,
                                     const TheoreticalOptions& opts = {});

// One record per user; deterministic given seed (per-user substreams, safe to
// parallelize across users).
std::vector<DatasetRecord> synthesize_dataset(const Scenario& s, std::uint64_t seed);

}  // namespace cqgen::scenario
