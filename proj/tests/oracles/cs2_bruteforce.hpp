#pragma once

#include <array>
#include <cstdint>

namespace oracle {

// |CS_2| by direct search: each of the 6 numbered edges independently takes
// one of the 12 ordered pairs of distinct vertices among 4; keep assignments
// where every vertex has degree 3 and the graph is connected.
inline std::uint64_t count_cs2() {
  std::array<std::array<int, 2>, 12> pairs{};
  int k = 0;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (u != v) pairs[k++] = {u, v};
    }
  }
  std::uint64_t count = 0;
  std::array<int, 6> choice{};
  for (std::uint64_t code = 0; code < 2985984; ++code) {  // 12^6
    std::uint64_t c = code;
    for (int e = 0; e < 6; ++e) {
      choice[e] = static_cast<int>(c % 12);
      c /= 12;
    }
    std::array<int, 4> degree{};
    for (int e = 0; e < 6; ++e) {
      ++degree[pairs[choice[e]][0]];
      ++degree[pairs[choice[e]][1]];
    }
    if (degree != std::array<int, 4>{3, 3, 3, 3}) continue;
    // Connectivity by repeated relaxation from vertex 0.
    unsigned reached = 1;
    for (int round = 0; round < 4; ++round) {
      for (int e = 0; e < 6; ++e) {
        const int a = pairs[choice[e]][0];
        const int b = pairs[choice[e]][1];
        if (reached & (1u << a) || reached & (1u << b)) reached |= (1u << a) | (1u << b);
      }
    }
    if (reached == 15u) ++count;
  }
  return count;
}

}  // namespace oracle
