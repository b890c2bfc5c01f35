#include "svbreak/metrics.hpp"

#include <numeric>
#include <ostream>

#include "svbreak/cipher.hpp"

namespace svbreak {

double recovery_rate(std::span<const Byte> recovered, std::span<const Byte> truth) {
    if (recovered.size() != truth.size())
        throw LengthMismatch("sequences have different lengths");
    if (recovered.empty()) return 100.0;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < recovered.size(); ++i)
        if (recovered[i] == truth[i]) ++matches;
    return 100.0 * static_cast<double>(matches) / static_cast<double>(recovered.size());
}

ByteVec difference_image(std::span<const Byte> a, std::span<const Byte> b) {
    if (a.size() != b.size()) throw LengthMismatch("sequences have different lengths");
    ByteVec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = mod_sub(a[i], b[i]);
    return diff;
}

std::uint64_t Histogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram histogram(std::span<const Byte> bytes) {
    Histogram hist;
    for (Byte b : bytes) ++hist.counts[b];
    return hist;
}

void write_histogram_csv(std::ostream& out, const Histogram& hist) {
    out << "value,count\n";
    for (std::size_t value = 0; value < hist.counts.size(); ++value)
        out << value << ',' << hist.counts[value] << '\n';
}

}  // namespace svbreak
