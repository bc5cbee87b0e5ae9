#include "freecomm/limits.hpp"

#include <atomic>
#include <string>

#include "freecomm/error.hpp"

namespace freecomm {

namespace {
std::atomic<std::size_t> g_index_cap{kDefaultIndexCap};
}

std::size_t index_cap() noexcept {
  return g_index_cap.load(std::memory_order_relaxed);
}

void set_index_cap(std::size_t cap) noexcept {
  g_index_cap.store(cap, std::memory_order_relaxed);
}

void check_index_cap(std::size_t vertices, char const* operation) {
  auto const cap = index_cap();
  if (vertices > cap) {
    throw IndexCapExceeded(std::string(operation) + ": " +
                           std::to_string(vertices) +
                           " vertices exceeds the index cap of " +
                           std::to_string(cap));
  }
}

}  // namespace freecomm
