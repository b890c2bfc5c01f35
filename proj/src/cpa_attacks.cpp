#include "svbreak/cpa_attacks.hpp"

#include <array>
#include <fstream>
#include <limits>

#include "wire.hpp"

namespace svbreak {

EquivalentKey zhang_method1(QueryOracle& oracle) {
    const std::size_t length = oracle.length();
    const ByteVec dark = oracle.query(ByteVec(length, 0));

    EquivalentKey ek;
    ek.v.resize(length);
    ek.k.resize(length);
    ByteVec probe(length, 0);
    for (std::size_t i = 0; i < length; ++i) {
        probe[i] = 1;
        const ByteVec cipher = oracle.query(probe);
        probe[i] = 0;

        std::size_t hits = 0;
        std::size_t where = 0;
        for (std::size_t j = 0; j < length; ++j) {
            if (cipher[j] != dark[j]) {
                where = j;
                ++hits;
            }
        }
        if (hits != 1)
            throw AmbiguousDifference("probe " + std::to_string(i) + " changed " +
                                      std::to_string(hits) + " cipher pixels, expected 1");
        ek.v[i] = static_cast<std::uint32_t>(where);
        ek.k[i] = dark[where];  // dark ciphertext carries the scattered mask
    }
    return ek;
}

EquivalentKey zhang_method2(QueryOracle& oracle) {
    const std::size_t length = oracle.length();
    const ByteVec dark = oracle.query(ByteVec(length, 0));

    EquivalentKey ek;
    ek.v.resize(length);
    ek.k.resize(length);
    ByteVec probe(length, 0);
    const std::size_t rounds = (length + 254) / 255;
    for (std::size_t t = 0; t < rounds; ++t) {
        const std::size_t base = t * 255;
        const std::size_t count = std::min<std::size_t>(255, length - base);
        for (std::size_t g = 1; g <= count; ++g)
            probe[base + g - 1] = static_cast<Byte>(g);
        const ByteVec cipher = oracle.query(probe);
        for (std::size_t g = 1; g <= count; ++g)
            probe[base + g - 1] = 0;

        // The difference image must contain the values 1..count exactly once.
        std::array<std::int64_t, 256> location;
        location.fill(-1);
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < length; ++j) {
            const Byte diff = mod_sub(cipher[j], dark[j]);
            if (diff == 0) continue;
            ++nonzero;
            if (diff > count || location[diff] != -1)
                throw AmbiguousDifference("round " + std::to_string(t) +
                                          " difference is not a clean value bijection");
            location[diff] = static_cast<std::int64_t>(j);
        }
        if (nonzero != count)
            throw AmbiguousDifference("round " + std::to_string(t) + " produced " +
                                      std::to_string(nonzero) + " differences, expected " +
                                      std::to_string(count));
        for (std::size_t g = 1; g <= count; ++g) {
            const auto j = static_cast<std::uint32_t>(location[g]);
            ek.v[base + g - 1] = j;
            ek.k[base + g - 1] = dark[j];
        }
    }
    return ek;
}

MaskSequence recover_mask(QueryOracle& oracle, Byte d) {
    const ByteVec cipher = oracle.query(ByteVec(oracle.length(), d));
    MaskSequence mask(cipher.size());
    for (std::size_t j = 0; j < cipher.size(); ++j)
        mask[j] = mod_sub(cipher[j], d);
    return mask;
}

std::size_t optimal_index_images(std::size_t length) {
    std::size_t q = 0;
    std::uint64_t addressable = 1;
    while (addressable < length) {
        addressable *= 256;
        ++q;
    }
    return q;
}

EquivalentKey optimal_cpa(QueryOracle& oracle, Byte d) {
    const std::size_t length = oracle.length();
    const MaskSequence mask = recover_mask(oracle, d);
    const std::size_t digits = optimal_index_images(length);

    // Reassemble each cipher position's plain index from its digit planes.
    std::vector<std::uint64_t> plain_index(length, 0);
    ByteVec plane(length);
    for (std::size_t t = 0; t < digits; ++t) {
        for (std::size_t i = 0; i < length; ++i)
            plane[i] = static_cast<Byte>((i >> (8 * t)) & 0xFF);
        const ByteVec cipher = oracle.query(plane);
        for (std::size_t j = 0; j < length; ++j)
            plain_index[j] |= static_cast<std::uint64_t>(mod_sub(cipher[j], mask[j])) << (8 * t);
    }

    EquivalentKey ek;
    ek.v.resize(length);
    ek.k.resize(length);
    std::vector<char> seen(length, 0);
    for (std::size_t j = 0; j < length; ++j) {
        const std::uint64_t i = plain_index[j];
        if (i >= length)
            throw InvalidIndex("cipher position " + std::to_string(j) +
                               " decodes to out-of-range index " + std::to_string(i));
        if (seen[i])
            throw InvalidIndex("two cipher positions decode to index " + std::to_string(i));
        seen[i] = 1;
        ek.v[i] = static_cast<std::uint32_t>(j);
        ek.k[i] = mask[j];
    }
    return ek;
}

void write_equivalent_key(std::ostream& out, const EquivalentKey& ek) {
    out.write("EQKY", 4);
    wire::put_u64(out, ek.v.size());
    for (std::uint32_t j : ek.v) wire::put_u32(out, j);
    out.write(reinterpret_cast<const char*>(ek.k.data()),
              static_cast<std::streamsize>(ek.k.size()));
}

EquivalentKey read_equivalent_key(std::istream& in) {
    char magic[4] = {0, 0, 0, 0};
    if (!in.read(magic, 4) || std::string_view(magic, 4) != "EQKY")
        throw BadMagic("not an equivalent-key (EQKY) stream");
    const std::uint64_t length = wire::get_u64(in);
    if (length > std::numeric_limits<std::uint32_t>::max())
        throw BadHeader("equivalent-key length out of range");
    EquivalentKey ek;
    ek.v.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        ek.v[i] = wire::get_u32(in);
        if (ek.v[i] >= length) throw InvalidIndex("equivalent-key index out of range");
    }
    ek.k.resize(length);
    if (!in.read(reinterpret_cast<char*>(ek.k.data()), static_cast<std::streamsize>(length)))
        throw IoError("truncated equivalent-key stream");
    return ek;
}

void save_equivalent_key(const std::string& path, const EquivalentKey& ek) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write equivalent key: " + path);
    write_equivalent_key(out, ek);
    if (!out.flush()) throw IoError("failed writing equivalent key: " + path);
}

EquivalentKey load_equivalent_key(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open equivalent key: " + path);
    return read_equivalent_key(in);
}

}  // namespace svbreak
