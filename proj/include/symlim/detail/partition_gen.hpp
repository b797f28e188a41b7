#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace symlim::detail {

/// Visits every partition of n as a weakly decreasing part list, in reverse
/// lexicographic order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
template <class Visit>
void for_each_partition(std::size_t n, Visit&& visit) {
  std::vector<std::uint32_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      visit(static_cast<const std::vector<std::uint32_t>&>(parts));
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(static_cast<std::uint32_t>(p));
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

}  // namespace symlim::detail
