#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fintop {

/// A nonnegative integer of unbounded size, carried as canonical decimal
/// (no leading zeros; "0" for zero).
class BigCount {
 public:
  BigCount() : digits_("0") {}
  explicit BigCount(std::uint64_t value) : digits_(std::to_string(value)) {}
  /// Throws InvalidInput unless `digits` is canonical decimal.
  static BigCount from_decimal(std::string_view digits);

  const std::string& str() const { return digits_; }
  /// The value if it fits in 64 bits.
  std::optional<std::uint64_t> to_uint64() const;

  friend bool operator==(const BigCount&, const BigCount&) = default;

 private:
  std::string digits_;
};

inline constexpr std::size_t kMaxBellIndex = 500;
inline constexpr std::size_t kMaxPartitionIndex = 10000;

/// Number of set partitions of an n-set, via the Bell triangle. B(0) = 1.
BigCount bell_number(std::size_t n);

/// Number of integer partitions of n, via Euler's pentagonal number
/// recurrence. p(0) = 1.
BigCount integer_partition_count(std::size_t n);

}  // namespace fintop
