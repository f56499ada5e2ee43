#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace memos {

// FNV-1a, used for parameter hashes embedded in reports
inline uint64_t fnv1a(std::string_view data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex(uint64_t v);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// runs fn(i) for i in [0,n); results must be written to pre-sized slots so the
// merge is deterministic regardless of thread scheduling
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace memos
