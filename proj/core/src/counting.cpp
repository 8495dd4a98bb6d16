#include "fintop/counting.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

namespace {

using boost::multiprecision::cpp_int;

BigCount to_count(const cpp_int& value) { return BigCount::from_decimal(value.str()); }

}  // namespace

BigCount BigCount::from_decimal(std::string_view digits) {
  bool ok = !digits.empty() && (digits.size() == 1 || digits.front() != '0');
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (!ok) throw InvalidInput("not a canonical decimal count: '" + std::string(digits) + "'");
  BigCount out;
  out.digits_ = std::string(digits);
  return out;
}

std::optional<std::uint64_t> BigCount::to_uint64() const {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits_.data(), digits_.data() + digits_.size(), value);
  if (ec != std::errc{} || ptr != digits_.data() + digits_.size()) return std::nullopt;
  return value;
}

BigCount bell_number(std::size_t n) {
  if (n > kMaxBellIndex) {
    throw SizeLimit("bell_number supports n <= " + std::to_string(kMaxBellIndex));
  }
  // Row k of the triangle starts with the last entry of row k-1; each further
  // entry adds the entry above-left. The first entry of row n is B(n).
  std::vector<cpp_int> row{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<cpp_int> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const cpp_int& above : row) next.push_back(next.back() + above);
    row = std::move(next);
  }
  return to_count(row.front());
}

BigCount integer_partition_count(std::size_t n) {
  if (n > kMaxPartitionIndex) {
    throw SizeLimit("integer_partition_count supports n <= " + std::to_string(kMaxPartitionIndex));
  }
  // p(m) = sum_{k >= 1} (-1)^(k+1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
  std::vector<cpp_int> p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    cpp_int sum = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      cpp_int term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[m] = std::move(sum);
  }
  return to_count(p[n]);
}

}  // namespace fintop
