#include "svbreak/image_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace svbreak {

namespace {

bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Positions the stream on the first digit of the next header token,
// skipping whitespace and '#' comment lines.
void skip_separators(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            while (in.peek() != EOF && in.get() != '\n') {
            }
        } else if (c != EOF && is_pnm_space(c)) {
            in.get();
        } else {
            return;
        }
    }
}

std::uint64_t read_header_uint(std::istream& in, const char* what) {
    skip_separators(in);
    if (in.peek() == EOF) throw BadHeader(std::string("missing ") + what + " in PGM header");
    std::uint64_t value = 0;
    bool any = false;
    while (in.peek() != EOF && in.peek() >= '0' && in.peek() <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(in.get() - '0');
        if (value > std::numeric_limits<std::uint32_t>::max())
            throw BadHeader(std::string(what) + " out of range in PGM header");
        any = true;
    }
    if (!any) throw BadHeader(std::string("malformed ") + what + " in PGM header");
    return value;
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
        throw BadMagic("not a binary PGM (P5) stream");

    const std::uint64_t width = read_header_uint(in, "width");
    const std::uint64_t height = read_header_uint(in, "height");
    const std::uint64_t maxval = read_header_uint(in, "maxval");
    if (width == 0 || height == 0) throw BadHeader("image dimensions must be positive");
    if (width * height > std::numeric_limits<std::uint32_t>::max())
        throw BadHeader("image too large");
    if (maxval != 255)
        throw UnsupportedMaxval("only maxval 255 is supported, got " + std::to_string(maxval));

    // Exactly one whitespace byte separates the header from the pixel data.
    const int sep = in.get();
    if (sep == EOF || !is_pnm_space(sep)) throw BadHeader("missing whitespace after maxval");

    GrayImage img;
    img.width = static_cast<std::uint32_t>(width);
    img.height = static_cast<std::uint32_t>(height);
    img.pixels.resize(static_cast<std::size_t>(width * height));
    if (!in.read(reinterpret_cast<char*>(img.pixels.data()),
                 static_cast<std::streamsize>(img.pixels.size())))
        throw TruncatedPixels("pixel data shorter than the header claims");
    return img;
}

void write_pgm(std::ostream& out, const GrayImage& img) {
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open image: " + path);
    return read_pgm(in);
}

void save_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write image: " + path);
    write_pgm(out, img);
    if (!out.flush()) throw IoError("failed writing image: " + path);
}

const ByteVec& to_sequence(const GrayImage& img) {
    return img.pixels;
}

GrayImage from_sequence(ByteVec seq, std::uint32_t width, std::uint32_t height) {
    if (seq.size() != static_cast<std::size_t>(width) * height)
        throw LengthMismatch("sequence length does not match width*height");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels = std::move(seq);
    return img;
}

}  // namespace svbreak
