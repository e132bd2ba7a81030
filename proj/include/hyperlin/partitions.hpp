#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperlin {

/// Visits every set partition of {0..s-1} exactly once, in lexicographic order of
/// restricted-growth strings. The callback receives the blocks as bitmasks, ordered by
/// their smallest element.
template <class Visit>
void for_each_set_partition(int s, Visit&& visit) {
  if (s == 0) {
    visit(std::span<const std::uint32_t>{});
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(s), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(s), 0);
  std::vector<std::uint32_t> blocks;
  blocks.reserve(static_cast<std::size_t>(s));
  while (true) {
    const int block_count = prefix_max[s - 1] + 1;
    blocks.assign(static_cast<std::size_t>(block_count), 0u);
    for (int i = 0; i < s; ++i) blocks[rgs[i]] |= 1u << i;
    visit(std::span<const std::uint32_t>(blocks));

    int i = s - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < s; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

/// Bell number B(s) for small s.
std::uint64_t bell_number(int s);

}  // namespace hyperlin
