#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace svbreak {

using Byte = std::uint8_t;
using ByteVec = std::vector<Byte>;

// Permutations are stored 0-based; on-disk formats use the same convention.
using IndexVec = std::vector<std::uint32_t>;

}  // namespace svbreak
