#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "cforge/utc.hpp"

namespace cforge {

inline constexpr double kEarthMuKm3S2 = 398600.4418;  // WGS-84 GM
inline constexpr double kEarthRadiusKm = 6378.137;

// Orbital elements lifted from one 3LE record. Angles in radians, mean
// motion in revolutions per day.
struct TleRecord {
  std::string name;
  int catalog_number = 0;
  UtcMicros epoch = 0;
  double inclination = 0.0;
  double raan = 0.0;
  double eccentricity = 0.0;
  double arg_perigee = 0.0;
  double mean_anomaly = 0.0;
  double mean_motion = 0.0;
};

struct StateVector {
  Eigen::Vector3d position_km = Eigen::Vector3d::Zero();
  UtcMicros timestamp = 0;
};

struct ParseResult {
  std::vector<TleRecord> records;
  std::vector<std::string> warnings;  // skipped records, with line numbers
};

// Modulo-10 checksum over the first 68 columns: digits add their value,
// minus signs add 1, everything else adds 0.
int tle_checksum(std::string_view first68);

// True when line is at least 69 columns and column 69 holds the checksum
// of columns 1-68.
bool tle_checksum_ok(std::string_view line);

// Parses concatenated 3-line element sets (name line + line 1 + line 2).
// Structural problems throw TleParseError with the offending line number;
// records whose checksum fails are skipped with a warning instead.
ParseResult parse_3le(std::string_view text);

// Renders a record back to its three lines (trailing newline included).
// parse_3le(format_3le(r)) reproduces r to field precision.
std::string format_3le(const TleRecord& rec);

// Solves Kepler's equation M = E - e*sin(E) by Newton iteration to the
// given residual tolerance. e must lie in [0, 1).
double solve_kepler(double mean_anomaly, double eccentricity, double tol = 1e-12);

// Semi-major axis from mean motion via mu = n^2 a^3.
double semi_major_axis_km(double mean_motion_rev_day);

// Two-body Keplerian position at time t (ECI frame, km). Requests more
// than 7 days from the record epoch throw StaleEpochError unless
// allow_stale is set.
StateVector propagate(const TleRecord& rec, UtcMicros t, bool allow_stale = false);

// Symmetric matrix of Euclidean separations; all states must share one
// timestamp.
Eigen::MatrixXd pairwise_distances(const std::vector<StateVector>& states);

// Downloads a text resource over HTTP(S); helper for pulling live element
// sets. Never used by tests; throws std::runtime_error on failure.
std::string fetch_text(const std::string& url);

}  // namespace cforge
