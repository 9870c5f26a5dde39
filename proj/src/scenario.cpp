#include "dnr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace dnr {

ScenarioSet build_scenarios(const MinuteProfiles& profiles, int start_minute,
                            int length_minutes, int samples_per_interval,
                            std::uint64_t seed, bool averaging, int period_id) {
  if (samples_per_interval < 1)
    throw ValidationError("samples_per_interval must be at least 1");
  if (length_minutes <= 0 || length_minutes % kIntervalMinutes != 0)
    throw ValidationError("period length must be a positive multiple of " +
                          std::to_string(kIntervalMinutes) + " minutes");
  if (start_minute < profiles.start_minute ||
      start_minute + length_minutes > profiles.end_minute())
    throw ValidationError("period lies outside the profile horizon");
  if (!averaging && samples_per_interval > kIntervalMinutes)
    throw ValidationError("cannot draw more than " +
                          std::to_string(kIntervalMinutes) +
                          " distinct samples per interval");

  const int intervals = length_minutes / kIntervalMinutes;
  ScenarioSet set;
  set.samples_per_interval = averaging ? 1 : samples_per_interval;
  set.period_id = period_id;
  std::mt19937_64 rng(seed);

  for (int iv = 0; iv < intervals; ++iv) {
    const int base = start_minute - profiles.start_minute +
                     iv * kIntervalMinutes;
    if (averaging) {
      InstanceData avg = profiles.minutes[static_cast<size_t>(base)];
      for (int k = 1; k < kIntervalMinutes; ++k) {
        const InstanceData& m = profiles.minutes[static_cast<size_t>(base + k)];
        avg.p_scale += m.p_scale;
        avg.q_scale += m.q_scale;
        avg.p_avail += m.p_avail;
      }
      avg.p_scale /= kIntervalMinutes;
      avg.q_scale /= kIntervalMinutes;
      avg.p_avail /= kIntervalMinutes;
      set.instances.push_back(std::move(avg));
      continue;
    }
    // sample distinct offsets, then keep chronological order
    std::vector<int> offsets(kIntervalMinutes);
    std::iota(offsets.begin(), offsets.end(), 0);
    for (int k = 0; k < samples_per_interval; ++k) {
      std::uniform_int_distribution<int> pick(k, kIntervalMinutes - 1);
      std::swap(offsets[static_cast<size_t>(k)],
                offsets[static_cast<size_t>(pick(rng))]);
    }
    std::sort(offsets.begin(), offsets.begin() + samples_per_interval);
    for (int k = 0; k < samples_per_interval; ++k) {
      set.instances.push_back(
          profiles.minutes[static_cast<size_t>(base + offsets[static_cast<size_t>(k)])]);
    }
  }
  return set;
}

namespace {

void write_instances_csv(const std::vector<InstanceData>& instances,
                         std::ostream& out) {
  out << "minute,bus_id,p_load_scale,q_load_scale,p_avail\n";
  char buf[128];
  for (const InstanceData& inst : instances) {
    for (int b = 0; b < inst.p_scale.size(); ++b) {
      if (inst.p_scale(b) == 0.0 && inst.q_scale(b) == 0.0 &&
          inst.p_avail(b) == 0.0)
        continue;
      std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%.12g,%.12g\n", inst.minute,
                    b, inst.p_scale(b), inst.q_scale(b), inst.p_avail(b));
      out << buf;
    }
  }
}

}  // namespace

void write_profiles_csv(const MinuteProfiles& profiles, std::ostream& out) {
  write_instances_csv(profiles.minutes, out);
}

void write_profiles_csv_file(const MinuteProfiles& profiles,
                             const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_profiles_csv(profiles, out);
}

void write_scenarios_csv(const ScenarioSet& set, std::ostream& out) {
  write_instances_csv(set.instances, out);
}

MinuteProfiles read_profiles_csv(std::istream& in, const Feeder& feeder) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty profiles CSV");
  struct Row {
    int minute, bus;
    double ps, qs, pa;
  };
  std::vector<Row> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Row r;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf,%lf", &r.minute, &r.bus, &r.ps,
                    &r.qs, &r.pa) != 5) {
      throw IoError("profiles CSV line " + std::to_string(line_no) +
                    " is malformed");
    }
    if (r.bus < 0 || r.bus >= feeder.n_buses()) {
      throw ValidationError("profiles CSV line " + std::to_string(line_no) +
                            " references unknown bus " + std::to_string(r.bus));
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw IoError("profiles CSV has no data rows");

  int lo = rows.front().minute, hi = rows.front().minute;
  for (const Row& r : rows) {
    lo = std::min(lo, r.minute);
    hi = std::max(hi, r.minute);
  }
  MinuteProfiles prof;
  prof.start_minute = lo;
  prof.minutes.resize(static_cast<size_t>(hi - lo + 1));
  const int nb = feeder.n_buses();
  for (size_t m = 0; m < prof.minutes.size(); ++m) {
    prof.minutes[m].minute = lo + static_cast<int>(m);
    prof.minutes[m].p_scale = Eigen::VectorXd::Zero(nb);
    prof.minutes[m].q_scale = Eigen::VectorXd::Zero(nb);
    prof.minutes[m].p_avail = Eigen::VectorXd::Zero(nb);
  }
  for (const Row& r : rows) {
    InstanceData& inst = prof.minutes[static_cast<size_t>(r.minute - lo)];
    inst.p_scale(r.bus) = r.ps;
    inst.q_scale(r.bus) = r.qs;
    inst.p_avail(r.bus) = r.pa;
  }
  return prof;
}

MinuteProfiles read_profiles_csv_file(const std::string& path,
                                      const Feeder& feeder) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profiles CSV '" + path + "'");
  return read_profiles_csv(in, feeder);
}

double percentile(std::vector<double> values, double pct) {
  if (values.empty()) throw Error("percentile of empty sample");
  std::sort(values.begin(), values.end());
  const double pos = pct / 100.0 * static_cast<double>(values.size() - 1);
  const size_t i = static_cast<size_t>(pos);
  if (i + 1 >= values.size()) return values.back();
  const double frac = pos - static_cast<double>(i);
  return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

MinuteProfiles generate_synthetic_profiles(const Feeder& feeder,
                                           const SyntheticOptions& opts) {
  const int nb = feeder.n_buses();
  const int total_minutes = opts.days * 24 * 60;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  MinuteProfiles prof;
  prof.start_minute = 0;
  prof.minutes.resize(static_cast<size_t>(total_minutes));
  for (int m = 0; m < total_minutes; ++m) {
    InstanceData& inst = prof.minutes[static_cast<size_t>(m)];
    inst.minute = m;
    inst.p_scale = Eigen::VectorXd::Zero(nb);
    inst.q_scale = Eigen::VectorXd::Zero(nb);
    inst.p_avail = Eigen::VectorXd::Zero(nb);
  }

  // per-bus day shapes: two harmonics with a bus-specific phase jitter
  const auto load_buses = feeder.load_buses();
  for (int b : load_buses) {
    const double phase1 = 13.0 + 2.0 * (unit(rng) - 0.5);   // evening peak
    const double phase2 = 2.0 + 2.0 * (unit(rng) - 0.5);    // morning hump
    const double amp1 = 0.30 + 0.10 * (unit(rng) - 0.5);
    const double amp2 = 0.12 + 0.06 * (unit(rng) - 0.5);
    for (int m = 0; m < total_minutes; ++m) {
      const double h = static_cast<double>(m % (24 * 60)) / 60.0;
      double s = 0.55 + amp1 * std::sin(2.0 * M_PI * (h - phase1) / 24.0) +
                 amp2 * std::sin(4.0 * M_PI * (h - phase2) / 24.0);
      s *= 1.0 + opts.noise_level * 2.0 * (unit(rng) - 0.5);
      prof.minutes[static_cast<size_t>(m)].p_scale(b) = std::max(0.05, s);
    }
  }

  // aggregate-load calibration against the duration curve
  std::vector<double> aggregate(static_cast<size_t>(total_minutes), 0.0);
  for (int m = 0; m < total_minutes; ++m) {
    double sum = 0.0;
    for (int b : load_buses) {
      const ZipLoad& z = *feeder.buses[static_cast<size_t>(b)].zip;
      sum += prof.minutes[static_cast<size_t>(m)].p_scale(b) * (-z.p_hi(1.0));
    }
    aggregate[static_cast<size_t>(m)] = sum;
  }
  const double anchor = percentile(aggregate, opts.load_percentile);
  const double total_nominal = feeder.total_nominal_load();
  if (anchor <= 0.0 || total_nominal <= 0.0)
    throw Error("cannot calibrate an all-zero load profile");
  const double load_scale = total_nominal / anchor;
  double load_energy = 0.0;
  for (int m = 0; m < total_minutes; ++m) {
    InstanceData& inst = prof.minutes[static_cast<size_t>(m)];
    for (int b : load_buses) {
      inst.p_scale(b) *= load_scale;
      inst.q_scale(b) = inst.p_scale(b);
    }
    load_energy += aggregate[static_cast<size_t>(m)] * load_scale;
  }

  // solar bell over daylight hours, calibrated to the energy share
  const auto der_buses = feeder.der_buses();
  if (!der_buses.empty()) {
    std::vector<double> weight;
    double raw_energy = 0.0;
    for (int b : der_buses) {
      const double w = 1.0 + 0.2 * (unit(rng) - 0.5);
      weight.push_back(w);
      for (int m = 0; m < total_minutes; ++m) {
        const double h = static_cast<double>(m % (24 * 60)) / 60.0;
        double s = 0.0;
        if (h > 6.5 && h < 19.5) {
          s = std::pow(std::sin(M_PI * (h - 6.5) / 13.0), 1.5);
          s *= 1.0 + opts.noise_level * 2.0 * (unit(rng) - 0.5);
          s = std::max(0.0, s);
        }
        const double val = w * s;
        prof.minutes[static_cast<size_t>(m)].p_avail(b) = val;
        raw_energy += val;
      }
    }
    const double target_energy = opts.solar_energy_share * load_energy;
    const double solar_scale = raw_energy > 0.0 ? target_energy / raw_energy : 0.0;
    for (int m = 0; m < total_minutes; ++m) {
      InstanceData& inst = prof.minutes[static_cast<size_t>(m)];
      for (size_t k = 0; k < der_buses.size(); ++k) {
        const int b = der_buses[k];
        const double cap = feeder.buses[static_cast<size_t>(b)].der->p_max;
        inst.p_avail(b) = std::min(cap, inst.p_avail(b) * solar_scale);
      }
    }
  }
  return prof;
}

}  // namespace dnr
