#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace adherence {

// Calendar day, stored as days since 1970-01-01 (proleptic Gregorian).
// Every duration in this project is an integer day count.
class Date {
 public:
  Date() = default;
  constexpr explicit Date(std::int32_t days) : days_(days) {}

  static Date from_civil(int year, int month, int day);
  // Parses strict YYYY-MM-DD; rejects anything else.
  static std::optional<Date> parse(std::string_view iso);

  std::string to_string() const;
  void civil(int& year, int& month, int& day) const;
  int year() const;
  int month() const;

  constexpr std::int32_t days_since_epoch() const { return days_; }

  friend constexpr auto operator<=>(Date a, Date b) = default;
  constexpr Date operator+(std::int32_t d) const { return Date(days_ + d); }
  constexpr Date operator-(std::int32_t d) const { return Date(days_ - d); }
  constexpr std::int32_t operator-(Date o) const { return days_ - o.days_; }

 private:
  std::int32_t days_ = 0;
};

}  // namespace adherence
