#include "cforge/utc.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace cforge {

namespace {

[[noreturn]] void bad_time(std::string_view text) {
  throw std::invalid_argument("invalid RFC3339 timestamp: " + std::string(text));
}

int parse_fixed_int(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') bad_time(text);
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

}  // namespace

// Howard Hinnant's civil-date algorithms (public domain formulation).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  year = static_cast<int>(y + (month <= 2));
}

UtcMicros utc_from_civil(int year, int month, int day, int hour, int minute,
                         int second, int micros) {
  const std::int64_t days = days_from_civil(year, month, day);
  return ((days * 24 + hour) * 60 + minute) * 60 * kMicrosPerSecond +
         second * kMicrosPerSecond + micros;
}

UtcMicros parse_rfc3339(std::string_view text) {
  // Fixed layout: 0123456789012345678
  //               YYYY-MM-DDThh:mm:ss
  if (text.size() < 20) bad_time(text);
  if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != 't') ||
      text[13] != ':' || text[16] != ':') {
    bad_time(text);
  }
  const int year = parse_fixed_int(text, 0, 4);
  const int month = parse_fixed_int(text, 5, 2);
  const int day = parse_fixed_int(text, 8, 2);
  const int hour = parse_fixed_int(text, 11, 2);
  const int minute = parse_fixed_int(text, 14, 2);
  const int second = parse_fixed_int(text, 17, 2);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 59) {
    bad_time(text);
  }

  std::size_t pos = 19;
  int micros = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int digits = 0;
    std::int64_t frac = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (digits < 6) frac = frac * 10 + (text[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0 || digits > 6) bad_time(text);
    while (digits < 6) {
      frac *= 10;
      ++digits;
    }
    micros = static_cast<int>(frac);
  }
  if (pos + 1 != text.size() || (text[pos] != 'Z' && text[pos] != 'z')) bad_time(text);

  return utc_from_civil(year, month, day, hour, minute, second, micros);
}

std::string format_rfc3339(UtcMicros t) {
  std::int64_t days = t / kMicrosPerDay;
  std::int64_t rem = t % kMicrosPerDay;
  if (rem < 0) {
    rem += kMicrosPerDay;
    --days;
  }
  int year = 0, month = 0, day = 0;
  civil_from_days(days, year, month, day);
  const int micros = static_cast<int>(rem % kMicrosPerSecond);
  std::int64_t secs = rem / kMicrosPerSecond;
  const int second = static_cast<int>(secs % 60);
  const int minute = static_cast<int>(secs / 60 % 60);
  const int hour = static_cast<int>(secs / 3600);

  char buf[40];
  if (micros != 0) {
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%06dZ", year,
                  month, day, hour, minute, second, micros);
  } else {
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", year,
                  month, day, hour, minute, second);
  }
  return buf;
}

}  // namespace cforge
