#pragma once

#include <string>

#include "cqgen/common.hpp"

namespace cqgen::propagation {

// Area-of-interest class; selects the path-loss formula variant.
enum class Aoi { Urban, Suburb, Rural };

// Hata urban sub-case for the receiver-height correction alpha(h_r).
enum class CitySize { Big, MidSmall };

const char* to_string(Aoi aoi);
Aoi aoi_from_string(const std::string& name);

// Transmit power and antenna gains. Gains default to 0 dBi.
struct LinkBudget {
    double pt_dbm = 43.0;
    double gt_dbi = 0.0;
    double gr_dbi = 0.0;
};

struct Environment {
    Aoi aoi = Aoi::Urban;
    CitySize city_size = CitySize::Big;
    double hata_k = 35.94;  // rural environmental factor, 35.94 (rural) .. 40.94 (desert)
};

// Tx-Rx geometry in SI units; per-model unit conversion (MHz, GHz, km) is internal.
struct LinkGeometry {
    double d_m;
    double ht_m;
    double hr_m;
    double fc_hz;
};

inline constexpr double kSpeedOfLight = 3.0e8;
inline constexpr double kHataMinHz = 150.0e6;
inline constexpr double kHataMaxHz = 1500.0e6;
inline constexpr double kWinner2MinHz = 2.0e9;
inline constexpr double kWinner2MaxHz = 6.0e9;

void validate(const LinkGeometry& geom);
void validate(const Environment& env);
void validate(const LinkBudget& budget);

// Free-space path loss: 20 log10(d) + 20 log10(f_c) + 20 log10(4 pi / c).
double fspl_db(const LinkGeometry& geom);

// Hata model, valid for f_c in [150, 1500] MHz.
double hata_pl_db(const Environment& env, const LinkGeometry& geom);

// WINNER II model, valid for f_c in [2, 6] GHz.
double winner2_pl_db(const Environment& env, const LinkGeometry& geom);

// Band dispatch: Hata in its band, WINNER II in its band, free-space fallback
// (with a warning) in the 1.5-2 GHz gap and outside both bands.
double path_loss_db(const Environment& env, const LinkGeometry& geom);

// PR = PT + G_r + G_t - PL, all dB-domain.
double received_power_dbm(const LinkBudget& budget, double pl_db);

}  // namespace cqgen::propagation
