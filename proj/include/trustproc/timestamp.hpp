#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace trustproc {

// UTC timestamp at second precision. Only the canonical ISO-8601 form
// "YYYY-MM-DDThh:mm:ssZ" is accepted; local offsets are not stored.
class Timestamp {
 public:
  Timestamp() = default;

  static std::optional<Timestamp> parse(std::string_view text);
  static Timestamp from_epoch(std::int64_t seconds) { return Timestamp(seconds); }

  std::int64_t epoch_seconds() const { return seconds_; }
  std::string to_string() const;

  auto operator<=>(const Timestamp&) const = default;
  bool operator==(const Timestamp&) const = default;

 private:
  explicit Timestamp(std::int64_t s) : seconds_(s) {}
  std::int64_t seconds_ = 0;
};

}  // namespace trustproc
