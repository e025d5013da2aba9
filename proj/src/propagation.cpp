#include "cqgen/propagation.hpp"

#include <cmath>
#include <sstream>

namespace cqgen::propagation {

const char* to_string(Aoi aoi) {
    switch (aoi) {
        case Aoi::Urban: return "urban";
        case Aoi::Suburb: return "suburb";
        case Aoi::Rural: return "rural";
    }
    return "?";
}

Aoi aoi_from_string(const std::string& name) {
    if (name == "urban") return Aoi::Urban;
    if (name == "suburb") return Aoi::Suburb;
    if (name == "rural") return Aoi::Rural;
    throw ValidationError("unknown AOI '" + name + "' (expected urban|suburb|rural)");
}

void validate(const LinkGeometry& geom) {
    if (!(geom.d_m > 0.0) || !std::isfinite(geom.d_m))
        throw ValidationError("link geometry: distance must be > 0 m");
    if (!(geom.ht_m > 0.0) || !std::isfinite(geom.ht_m))
        throw ValidationError("link geometry: transmitter height must be > 0 m");
    if (!(geom.hr_m > 0.0) || !std::isfinite(geom.hr_m))
        throw ValidationError("link geometry: receiver height must be > 0 m");
    if (!(geom.fc_hz > 0.0) || !std::isfinite(geom.fc_hz))
        throw ValidationError("link geometry: carrier frequency must be > 0 Hz");
}

void validate(const Environment& env) {
    if (env.hata_k < 35.94 || env.hata_k > 40.94)
        throw ValidationError("environment: hata_k must lie in [35.94, 40.94]");
}

void validate(const LinkBudget& budget) {
    if (!std::isfinite(budget.pt_dbm) || !std::isfinite(budget.gt_dbi) || !std::isfinite(budget.gr_dbi))
        throw ValidationError("link budget: all fields must be finite");
    if (budget.pt_dbm < 0.0 || budget.pt_dbm > 80.0)
        throw ValidationError("link budget: transmit power outside [0, 80] dBm");
}

double fspl_db(const LinkGeometry& geom) {
    validate(geom);
    return 20.0 * std::log10(geom.d_m) + 20.0 * std::log10(geom.fc_hz) +
           20.0 * std::log10(4.0 * M_PI / kSpeedOfLight);
}

namespace {

double hata_alpha_hr(CitySize city_size, double fc_mhz, double hr_m) {
    if (city_size == CitySize::Big) {
        const double l = std::log10(11.75 * hr_m);
        return 3.2 * l * l - 4.97;
    }
    const double lf = std::log10(fc_mhz);
    return (1.1 * lf - 0.7) * hr_m - (1.56 * lf - 0.8);
}

}  // namespace

double hata_pl_db(const Environment& env, const LinkGeometry& geom) {
    validate(geom);
    validate(env);
    if (geom.fc_hz < kHataMinHz || geom.fc_hz > kHataMaxHz) {
        std::ostringstream msg;
        msg << "Hata model: frequency " << geom.fc_hz << " Hz outside valid band [150, 1500] MHz";
        throw ValidationError(msg.str());
    }
    const double fc_mhz = geom.fc_hz / 1.0e6;
    const double d_km = geom.d_m / 1000.0;
    const double log_f = std::log10(fc_mhz);
    const double log_ht = std::log10(geom.ht_m);

    const double urban = 69.55 + 26.16 * log_f - 13.82 * log_ht -
                         hata_alpha_hr(env.city_size, fc_mhz, geom.hr_m) +
                         (44.9 - 6.55 * log_ht) * std::log10(d_km);
    switch (env.aoi) {
        case Aoi::Urban:
            return urban;
        case Aoi::Suburb: {
            const double lf20 = std::log10(fc_mhz / 20.0);
            return urban - 2.0 * lf20 * lf20 - 5.4;
        }
        case Aoi::Rural:
            return urban - 4.78 * log_f * log_f + 18.33 * log_f - env.hata_k;
    }
    return urban;
}

double winner2_pl_db(const Environment& env, const LinkGeometry& geom) {
    validate(geom);
    validate(env);
    if (geom.fc_hz < kWinner2MinHz || geom.fc_hz > kWinner2MaxHz) {
        std::ostringstream msg;
        msg << "WINNER II model: frequency " << geom.fc_hz << " Hz outside valid band [2, 6] GHz";
        throw ValidationError(msg.str());
    }
    const double fc_ghz = geom.fc_hz / 1.0e9;
    const double log_d = std::log10(geom.d_m);
    const double log_ht = std::log10(geom.ht_m);
    const double log_hr = std::log10(geom.hr_m);
    const double log_f5 = std::log10(fc_ghz / 5.0);
    switch (env.aoi) {
        case Aoi::Urban:
            return 40.0 * log_d + 9.45 - 17.3 * log_ht - 17.3 * log_hr + 2.7 * log_f5;
        case Aoi::Suburb:
            return 40.0 * log_d + 11.65 - 16.2 * log_ht - 16.2 * log_hr + 3.8 * log_f5;
        case Aoi::Rural:
            return 40.0 * log_d + 10.5 - 18.5 * log_ht - 18.5 * log_hr + 1.5 * log_f5;
    }
    return 0.0;
}

double path_loss_db(const Environment& env, const LinkGeometry& geom) {
    validate(geom);
    if (geom.fc_hz >= kHataMinHz && geom.fc_hz <= kHataMaxHz)
        return hata_pl_db(env, geom);
    if (geom.fc_hz >= kWinner2MinHz && geom.fc_hz <= kWinner2MaxHz)
        return winner2_pl_db(env, geom);
    std::ostringstream msg;
    msg << "frequency " << geom.fc_hz
        << " Hz outside Hata and WINNER II bands; falling back to free-space path loss";
    warn(msg.str());
    return fspl_db(geom);
}

double received_power_dbm(const LinkBudget& budget, double pl_db) {
    if (!std::isfinite(pl_db)) throw ValidationError("received_power_dbm: path loss must be finite");
    return budget.pt_dbm + budget.gr_dbi + budget.gt_dbi - pl_db;
}

}  // namespace cqgen::propagation
