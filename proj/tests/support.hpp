#ifndef SPECHTGB_TESTS_SUPPORT_HPP
#define SPECHTGB_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spechtgb/spechtgb.hpp"

namespace spechtgb::testing {

/// n! / prod of hook lengths.
inline std::uint64_t hook_length_count(const Partition& lambda) {
  const auto heights = lambda.column_heights();
  std::uint64_t num = 1, den = 1;
  for (int k = 2; k <= lambda.n(); ++k) num *= static_cast<std::uint64_t>(k);
  for (std::size_t r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      const int arm = lambda[r] - c - 1;
      const int leg = heights[c] - static_cast<int>(r) - 1;
      den *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  return num / den;
}

/// Standard Young tableaux counted by placing n, n-1, ... into removable
/// corners; independent of the tableau enumerator.
inline std::uint64_t count_standard_by_corners(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) return 1;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
    if (!corner) continue;
    auto smaller = parts;
    --smaller[r];
    total += count_standard_by_corners(std::move(smaller));
  }
  return total;
}

inline Polynomial<Rationals> qpoly(const std::string& text, std::size_t n) {
  return parse_polynomial(text, n, Rationals{});
}

inline std::vector<Polynomial<Rationals>> qpolys(const std::vector<std::string>& texts, std::size_t n) {
  std::vector<Polynomial<Rationals>> out;
  for (const auto& t : texts) out.push_back(qpoly(t, n));
  return out;
}

inline PartitionFilter lower_of(const Partition& lambda) {
  return filter_closure(lambda.n(), {lambda}, FilterKind::lower);
}

}  // namespace spechtgb::testing

#endif  // SPECHTGB_TESTS_SUPPORT_HPP
