#pragma once

#include <cstdint>
#include <string>

namespace hnilm {

inline constexpr std::int64_t kSecondsPerDay = 86400;
inline constexpr std::int64_t kSecondsPerWeek = 7 * kSecondsPerDay;

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

// Local civil-day index (days since 1970-01-01) for a UTC timestamp.
constexpr std::int64_t local_day(std::int64_t utc_seconds, std::int64_t utc_offset) {
    return floor_div(utc_seconds + utc_offset, kSecondsPerDay);
}

// Day of week with Monday = 0 .. Sunday = 6; day 0 (1970-01-01) was a Thursday.
constexpr int day_of_week(std::int64_t day_index) {
    return static_cast<int>(floor_mod(day_index + 3, 7));
}

constexpr bool is_weekend(std::int64_t day_index) {
    return day_of_week(day_index) >= 5;
}

constexpr int local_hour(std::int64_t utc_seconds, std::int64_t utc_offset) {
    return static_cast<int>(floor_mod(utc_seconds + utc_offset, kSecondsPerDay) / 3600);
}

// Seconds since local Monday 00:00.
constexpr std::int64_t week_second(std::int64_t utc_seconds, std::int64_t utc_offset) {
    std::int64_t local = utc_seconds + utc_offset;
    std::int64_t day = floor_div(local, kSecondsPerDay);
    return static_cast<std::int64_t>(day_of_week(day)) * kSecondsPerDay + floor_mod(local, kSecondsPerDay);
}

struct CivilDate {
    int year;
    unsigned month;
    unsigned day;
};

// Days-since-epoch to proleptic Gregorian date (Hinnant's civil_from_days).
constexpr CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    std::int64_t era = floor_div(z, 146097);
    unsigned doe = static_cast<unsigned>(z - era * 146097);
    unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    unsigned mp = (5 * doy + 2) / 153;
    unsigned d = doy - (153 * mp + 2) / 5 + 1;
    unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return {static_cast<int>(y + (m <= 2)), m, d};
}

inline std::string day_to_string(std::int64_t day_index) {
    CivilDate c = civil_from_days(day_index);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
    return buf;
}

} // namespace hnilm
