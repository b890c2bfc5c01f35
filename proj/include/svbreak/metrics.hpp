#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>

#include "svbreak/errors.hpp"
#include "svbreak/types.hpp"

namespace svbreak {

// Percentage of positions where the two sequences agree exactly; 100 for
// two empty sequences. Throws LengthMismatch.
double recovery_rate(std::span<const Byte> recovered, std::span<const Byte> truth);

// Elementwise a - b (mod 256). Throws LengthMismatch.
ByteVec difference_image(std::span<const Byte> a, std::span<const Byte> b);

struct Histogram {
    std::array<std::uint64_t, 256> counts{};

    std::uint64_t total() const;

    bool operator==(const Histogram&) const = default;
};

Histogram histogram(std::span<const Byte> bytes);

// CSV with a "value,count" header and 256 data rows.
void write_histogram_csv(std::ostream& out, const Histogram& hist);

}  // namespace svbreak
