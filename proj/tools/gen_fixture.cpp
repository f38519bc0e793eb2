// Emits the deterministic synthetic Starlink-like 3LE fixture used by the
// tests: three shells (550/570/540 km) with staggered planes, 120 records
// total, all epochs at 2025-06-01T00:00:00Z. Formatting goes through
// format_3le so checksums and field layout match the parser exactly.

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "cforge/json_io.hpp"
#include "cforge/tle.hpp"
#include "cforge/utc.hpp"

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

double mean_motion_for_altitude(double altitude_km) {
  const double a = cforge::kEarthRadiusKm + altitude_km;
  const double n = std::sqrt(cforge::kEarthMuKm3S2 / (a * a * a));  // rad/s
  return n * 86400.0 / (2.0 * std::numbers::pi);
}

struct Shell {
  double altitude_km;
  double inclination_deg;
  int planes;
  int sats_per_plane;
  double raan_offset_deg;
};

}  // namespace

int main(int argc, char** argv) {
  const Shell shells[] = {
      {550.0, 53.0, 12, 8, 0.0},
      {570.0, 70.0, 4, 4, 10.0},
      {540.0, 97.6, 2, 4, 20.0},
  };
  const cforge::UtcMicros epoch = cforge::parse_rfc3339("2025-06-01T00:00:00Z");

  std::string out;
  int index = 0;
  for (const Shell& shell : shells) {
    const double mm = mean_motion_for_altitude(shell.altitude_km);
    const double raan_step = 360.0 / shell.planes;
    const double anomaly_step = 360.0 / shell.sats_per_plane;
    for (int plane = 0; plane < shell.planes; ++plane) {
      for (int sat = 0; sat < shell.sats_per_plane; ++sat) {
        cforge::TleRecord rec;
        rec.name = "STARLINK-" + std::to_string(3000 + index);
        rec.catalog_number = 44713 + index;
        rec.epoch = epoch;
        rec.inclination = kDegToRad * shell.inclination_deg;
        rec.raan =
            kDegToRad * std::fmod(shell.raan_offset_deg + plane * raan_step, 360.0);
        rec.eccentricity = 0.0001 * (1 + index % 13);
        rec.arg_perigee = kDegToRad * ((index * 37) % 360);
        // Stagger anomalies across planes so slots do not align.
        rec.mean_anomaly = kDegToRad *
                           std::fmod(sat * anomaly_step +
                                         plane * anomaly_step / shell.planes,
                                     360.0);
        rec.mean_motion = mm;
        out += cforge::format_3le(rec);
        ++index;
      }
    }
  }

  if (argc > 1) {
    cforge::write_text_file(argv[1], out);
    std::cerr << "wrote " << index << " records to " << argv[1] << "\n";
  } else {
    std::cout << out;
  }
  return 0;
}
