#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dnr/feeder.hpp"

namespace dnr {

/// Load/solar data for one operating instant. Vectors are indexed by bus id;
/// entries are zero for buses without the matching device.
struct InstanceData {
  int minute = 0;  ///< minutes since the start of the profile horizon
  Eigen::VectorXd p_scale;  ///< per-bus multiplier on the nominal active ZIP
  Eigen::VectorXd q_scale;  ///< per-bus multiplier on the nominal reactive ZIP
  Eigen::VectorXd p_avail;  ///< per-bus available DER active power, pu
};

/// Minute-resolution horizon used both as sampling source and for post-hoc
/// evaluation. minutes[i].minute == start_minute + i.
struct MinuteProfiles {
  int start_minute = 0;
  std::vector<InstanceData> minutes;

  int end_minute() const {
    return start_minute + static_cast<int>(minutes.size());
  }
};

constexpr int kIntervalMinutes = 15;

/// Sampled (or averaged) per-period operating instances fed to the
/// optimizer. With sampling, T = (#intervals) * samples_per_interval.
struct ScenarioSet {
  std::vector<InstanceData> instances;
  int samples_per_interval = 1;
  int period_id = 0;

  int size() const { return static_cast<int>(instances.size()); }
};

/// Draws samples_per_interval distinct minutes from every 15-min interval of
/// [start_minute, start_minute+length_minutes). Reproducible from the seed.
/// In averaging mode one instance per interval carries the interval means.
ScenarioSet build_scenarios(const MinuteProfiles& profiles, int start_minute,
                            int length_minutes, int samples_per_interval,
                            std::uint64_t seed, bool averaging = false,
                            int period_id = 0);

/// CSV with header minute,bus_id,p_load_scale,q_load_scale,p_avail; one row
/// per instant and device-carrying bus.
void write_profiles_csv(const MinuteProfiles& profiles, std::ostream& out);
void write_profiles_csv_file(const MinuteProfiles& profiles,
                             const std::string& path);
MinuteProfiles read_profiles_csv(std::istream& in, const Feeder& feeder);
MinuteProfiles read_profiles_csv_file(const std::string& path,
                                      const Feeder& feeder);
void write_scenarios_csv(const ScenarioSet& set, std::ostream& out);

struct SyntheticOptions {
  std::uint64_t seed = 1;
  int days = 1;
  double load_percentile = 80.0;    ///< duration-curve anchor, percent
  double solar_energy_share = 0.75; ///< PV energy over total load energy
  double noise_level = 0.04;        ///< relative minute-level noise
  // ZIP composition used when spot loads are synthesized elsewhere; kept
  // here so fixtures state their assumption explicitly.
  double frac_z = 0.2, frac_i = 0.3, frac_p = 0.5;
};

/// Sum-of-sinusoids day shapes with seeded noise, then two calibrations:
/// the aggregate load duration curve is scaled so its load_percentile-th
/// percentile equals the feeder's total nominal spot load, and solar is
/// scaled so PVs supply solar_energy_share of the total load energy
/// (clipped per-DER at p_max afterwards).
MinuteProfiles generate_synthetic_profiles(const Feeder& feeder,
                                           const SyntheticOptions& opts);

/// Ascending-order linear-interpolation percentile, pct in [0, 100].
double percentile(std::vector<double> values, double pct);

}  // namespace dnr
