#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "svbreak/errors.hpp"
#include "svbreak/types.hpp"

namespace svbreak {

// 8-bit gray-scale image; pixels in raster (row-major) order.
struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    ByteVec pixels;

    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

// Binary PGM ("P5") with maxval 255. Header comments (#) and arbitrary
// whitespace are accepted between tokens.
GrayImage read_pgm(std::istream& in);

// Emits "P5\n<width> <height>\n255\n" followed by the raw pixel bytes.
void write_pgm(std::ostream& out, const GrayImage& img);

GrayImage load_pgm(const std::string& path);
void save_pgm(const std::string& path, const GrayImage& img);

// Raster-order flattening and its inverse.
const ByteVec& to_sequence(const GrayImage& img);
GrayImage from_sequence(ByteVec seq, std::uint32_t width, std::uint32_t height);

}  // namespace svbreak
