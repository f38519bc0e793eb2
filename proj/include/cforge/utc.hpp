#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cforge {

// Microseconds since the Unix epoch (UTC, leap seconds ignored).
using UtcMicros = std::int64_t;

inline constexpr std::int64_t kMicrosPerSecond = 1'000'000;
inline constexpr std::int64_t kMicrosPerDay = 86'400 * kMicrosPerSecond;

// Days since 1970-01-01 for a proleptic-Gregorian civil date.
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);

UtcMicros utc_from_civil(int year, int month, int day, int hour = 0,
                         int minute = 0, int second = 0, int micros = 0);

// Accepts "YYYY-MM-DDThh:mm:ss[.ffffff]Z"; throws std::invalid_argument.
UtcMicros parse_rfc3339(std::string_view text);

// Emits "YYYY-MM-DDThh:mm:ssZ", with ".ffffff" when sub-second digits exist.
std::string format_rfc3339(UtcMicros t);

}  // namespace cforge
