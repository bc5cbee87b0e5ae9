#pragma once

#include <cstddef>

namespace freecomm {

inline constexpr std::size_t kDefaultIndexCap = 10'000;

// Process-wide cap on the number of vertices any graph construction may
// produce. Operations throw IndexCapExceeded past it.
std::size_t index_cap() noexcept;
void set_index_cap(std::size_t cap) noexcept;

// Throws IndexCapExceeded when `vertices` exceeds the current cap.
void check_index_cap(std::size_t vertices, char const* operation);

}  // namespace freecomm
