#include "cforge/tle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "cforge/errors.hpp"

namespace cforge {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kStaleLimitMicros = 7 * kMicrosPerDay;

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view trim(std::string_view s) {
  s = rtrim(s);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

double parse_double_field(std::string_view line, std::size_t pos, std::size_t len,
                          const char* what, int line_no) {
  const std::string_view field = trim(line.substr(pos, len));
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
    throw TleParseError(std::string("unparseable ") + what + " field '" +
                            std::string(field) + "'",
                        line_no);
  }
  return value;
}

int parse_int_field(std::string_view line, std::size_t pos, std::size_t len,
                    const char* what, int line_no) {
  const std::string_view field = trim(line.substr(pos, len));
  int value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
    throw TleParseError(std::string("unparseable ") + what + " field '" +
                            std::string(field) + "'",
                        line_no);
  }
  return value;
}

bool is_element_line(std::string_view line, char which) {
  return line.size() >= 2 && line[0] == which && line[1] == ' ';
}

// Columns are the classic NORAD fixed layout, 0-indexed [pos, pos+len).
struct Line1Fields {
  int catalog = 0;
  UtcMicros epoch = 0;
};

Line1Fields parse_line1(std::string_view line, int line_no) {
  Line1Fields out;
  out.catalog = parse_int_field(line, 2, 5, "catalog number", line_no);
  const int two_digit_year = parse_int_field(line, 18, 2, "epoch year", line_no);
  const double day_of_year = parse_double_field(line, 20, 12, "epoch day", line_no);
  if (day_of_year < 1.0 || day_of_year >= 367.0) {
    throw TleParseError("epoch day of year out of range", line_no);
  }
  const int year = two_digit_year >= 57 ? 1900 + two_digit_year : 2000 + two_digit_year;
  out.epoch = utc_from_civil(year, 1, 1) +
              static_cast<UtcMicros>(std::llround((day_of_year - 1.0) * kMicrosPerDay));
  return out;
}

void parse_line2(std::string_view line, int line_no, TleRecord& rec) {
  const int catalog = parse_int_field(line, 2, 5, "catalog number", line_no);
  if (catalog != rec.catalog_number) {
    throw TleParseError("catalog number does not match line 1", line_no);
  }
  rec.inclination = kDegToRad * parse_double_field(line, 8, 8, "inclination", line_no);
  rec.raan = kDegToRad * parse_double_field(line, 17, 8, "RAAN", line_no);
  // Eccentricity carries an implied leading "0.".
  const std::string_view ecc_field = line.substr(26, 7);
  for (char ch : ecc_field) {
    if (ch < '0' || ch > '9') {
      throw TleParseError("unparseable eccentricity field '" +
                              std::string(ecc_field) + "'",
                          line_no);
    }
  }
  rec.eccentricity =
      parse_int_field(line, 26, 7, "eccentricity", line_no) / 1e7;
  rec.arg_perigee = kDegToRad * parse_double_field(line, 34, 8, "argument of perigee", line_no);
  rec.mean_anomaly = kDegToRad * parse_double_field(line, 43, 8, "mean anomaly", line_no);
  rec.mean_motion = parse_double_field(line, 52, 11, "mean motion", line_no);
  if (!(rec.mean_motion > 0.0)) {
    throw TleParseError("mean motion must be positive", line_no);
  }
}

}  // namespace

int tle_checksum(std::string_view first68) {
  int sum = 0;
  for (char ch : first68.substr(0, 68)) {
    if (ch >= '0' && ch <= '9') sum += ch - '0';
    if (ch == '-') sum += 1;
  }
  return sum % 10;
}

bool tle_checksum_ok(std::string_view line) {
  line = rtrim(line);
  if (line.size() < 69) return false;
  const char check = line[68];
  if (check < '0' || check > '9') return false;
  return tle_checksum(line) == check - '0';
}

ParseResult parse_3le(std::string_view text) {
  ParseResult result;

  std::string pending_name;
  bool have_name = false;
  int name_line_no = 0;

  std::string line1;
  int line1_no = 0;
  bool have_line1 = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string_view line = rtrim(raw);
    if (line.empty()) continue;

    if (is_element_line(line, '1')) {
      if (line.size() != 69) {
        throw TleParseError("element line must be 69 columns, got " +
                                std::to_string(line.size()),
                            line_no);
      }
      if (have_line1) throw TleParseError("element line 1 repeated", line_no);
      line1 = std::string(line);
      line1_no = line_no;
      have_line1 = true;
    } else if (is_element_line(line, '2')) {
      if (line.size() != 69) {
        throw TleParseError("element line must be 69 columns, got " +
                                std::to_string(line.size()),
                            line_no);
      }
      if (!have_line1) throw TleParseError("element line 2 without line 1", line_no);

      if (!tle_checksum_ok(line1)) {
        result.warnings.push_back("record '" + pending_name +
                                  "' skipped: checksum mismatch on line " +
                                  std::to_string(line1_no));
      } else if (!tle_checksum_ok(line)) {
        result.warnings.push_back("record '" + pending_name +
                                  "' skipped: checksum mismatch on line " +
                                  std::to_string(line_no));
      } else {
        TleRecord rec;
        rec.name = pending_name;
        const Line1Fields l1 = parse_line1(line1, line1_no);
        rec.catalog_number = l1.catalog;
        rec.epoch = l1.epoch;
        parse_line2(line, line_no, rec);
        result.records.push_back(std::move(rec));
      }
      pending_name.clear();
      have_name = false;
      have_line1 = false;
    } else {
      if (have_line1) throw TleParseError("expected element line 2", line_no);
      if (have_name) throw TleParseError("unexpected second name line", line_no);
      // Satellite-number prefix form "0 NAME" is accepted and stripped.
      std::string_view name = line;
      if (name.size() >= 2 && name[0] == '0' && name[1] == ' ') name.remove_prefix(2);
      pending_name = std::string(trim(name));
      have_name = true;
      name_line_no = line_no;
    }
  }
  if (have_line1) throw TleParseError("element set truncated after line 1", line1_no);
  if (have_name) {
    throw TleParseError("name line without element lines", name_line_no);
  }
  return result;
}

std::string format_3le(const TleRecord& rec) {
  int year = 0, month = 0, day = 0;
  const std::int64_t days = rec.epoch >= 0
                                ? rec.epoch / kMicrosPerDay
                                : (rec.epoch - (kMicrosPerDay - 1)) / kMicrosPerDay;
  civil_from_days(days, year, month, day);
  const std::int64_t jan1 = utc_from_civil(year, 1, 1);
  const double day_of_year =
      1.0 + static_cast<double>(rec.epoch - jan1) / static_cast<double>(kMicrosPerDay);
  if (year < 1957 || year > 2056) {
    throw std::invalid_argument("epoch year outside two-digit TLE range");
  }

  char line1[80];
  char intl[10];
  std::snprintf(intl, sizeof(intl), "%02d%03dA", year % 100,
                rec.catalog_number % 1000);
  std::snprintf(line1, sizeof(line1),
                "1 %05dU %-8s %02d%012.8f  .00000000  00000+0  00000+0 0 %4d",
                rec.catalog_number, intl, year % 100, day_of_year, 999);

  char line2[80];
  std::snprintf(line2, sizeof(line2),
                "2 %05d %8.4f %8.4f %07d %8.4f %8.4f %11.8f%5d",
                rec.catalog_number, rec.inclination / kDegToRad,
                rec.raan / kDegToRad,
                static_cast<int>(std::llround(rec.eccentricity * 1e7)),
                rec.arg_perigee / kDegToRad, rec.mean_anomaly / kDegToRad,
                rec.mean_motion, 10);

  std::string out = rec.name + "\n";
  out += line1;
  out += static_cast<char>('0' + tle_checksum(line1));
  out += "\n";
  out += line2;
  out += static_cast<char>('0' + tle_checksum(line2));
  out += "\n";
  return out;
}

double solve_kepler(double mean_anomaly, double eccentricity, double tol) {
  if (!(eccentricity >= 0.0) || eccentricity >= 1.0) {
    throw std::invalid_argument("eccentricity must lie in [0, 1)");
  }
  if (!std::isfinite(mean_anomaly)) {
    throw std::invalid_argument("mean anomaly must be finite");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (eccentricity == 0.0) return mean_anomaly;

  double m = std::fmod(mean_anomaly, kTwoPi);
  if (m < 0.0) m += kTwoPi;
  const double shift = mean_anomaly - m;

  double e_anom = eccentricity > 0.8 ? std::numbers::pi : m;
  for (int iter = 0; iter < 50; ++iter) {
    const double f = e_anom - eccentricity * std::sin(e_anom) - m;
    if (std::abs(f) <= tol) return e_anom + shift;
    e_anom -= f / (1.0 - eccentricity * std::cos(e_anom));
  }
  throw std::runtime_error("Kepler iteration did not converge");
}

double semi_major_axis_km(double mean_motion_rev_day) {
  if (!(mean_motion_rev_day > 0.0) || !std::isfinite(mean_motion_rev_day)) {
    throw std::invalid_argument("mean motion must be positive");
  }
  const double n = mean_motion_rev_day * kTwoPi / 86400.0;  // rad/s
  return std::cbrt(kEarthMuKm3S2 / (n * n));
}

StateVector propagate(const TleRecord& rec, UtcMicros t, bool allow_stale) {
  if (!(rec.eccentricity >= 0.0) || rec.eccentricity >= 1.0) {
    throw std::invalid_argument("eccentricity must lie in [0, 1)");
  }
  const std::int64_t age = t >= rec.epoch ? t - rec.epoch : rec.epoch - t;
  if (age > kStaleLimitMicros && !allow_stale) {
    throw StaleEpochError("propagation request is " +
                          std::to_string(age / kMicrosPerDay) +
                          " days from the element epoch of '" + rec.name +
                          "' (limit 7)");
  }

  const double dt = static_cast<double>(t - rec.epoch) / kMicrosPerSecond;
  const double n = rec.mean_motion * kTwoPi / 86400.0;
  const double a = semi_major_axis_km(rec.mean_motion);
  const double e = rec.eccentricity;
  const double e_anom = solve_kepler(rec.mean_anomaly + n * dt, e);

  // Perifocal coordinates straight from the eccentric anomaly.
  const double x_pf = a * (std::cos(e_anom) - e);
  const double y_pf = a * std::sqrt(1.0 - e * e) * std::sin(e_anom);

  const Eigen::Matrix3d rot =
      (Eigen::AngleAxisd(rec.raan, Eigen::Vector3d::UnitZ()) *
       Eigen::AngleAxisd(rec.inclination, Eigen::Vector3d::UnitX()) *
       Eigen::AngleAxisd(rec.arg_perigee, Eigen::Vector3d::UnitZ()))
          .toRotationMatrix();

  StateVector state;
  state.position_km = rot * Eigen::Vector3d(x_pf, y_pf, 0.0);
  state.timestamp = t;
  return state;
}

Eigen::MatrixXd pairwise_distances(const std::vector<StateVector>& states) {
  const int n = static_cast<int>(states.size());
  for (const auto& s : states) {
    if (s.timestamp != states.front().timestamp) {
      throw std::invalid_argument("pairwise distances need a common timestamp");
    }
  }
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = (states[i].position_km - states[j].position_km).norm();
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return dist;
}

}  // namespace cforge
