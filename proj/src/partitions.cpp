#include "hyperlin/partitions.hpp"

namespace hyperlin {

std::uint64_t bell_number(int s) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < s; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace hyperlin
