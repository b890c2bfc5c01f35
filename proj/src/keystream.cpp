#include "svbreak/keystream.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "wire.hpp"

namespace svbreak {

void validate(const SecretKey& key) {
    const double fields[] = {key.x0, key.y0, key.mu1, key.mu2, key.gamma1, key.gamma2};
    for (double f : fields)
        if (!std::isfinite(f)) throw InvalidKey("secret key has a non-finite field");
    if (key.x0 <= 0.0 || key.x0 >= 1.0 || key.y0 <= 0.0 || key.y0 >= 1.0)
        throw InvalidKey("x0 and y0 must lie strictly inside (0,1)");
}

SecretKey random_secret_key(std::uint64_t seed, std::size_t probe_length) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    for (;;) {
        SecretKey key;
        key.x0 = uniform(0.01, 0.99);
        key.y0 = uniform(0.01, 0.99);
        key.mu1 = uniform(2.75, 3.40);
        key.mu2 = uniform(2.75, 3.45);
        key.gamma1 = uniform(0.15, 0.21);
        key.gamma2 = uniform(0.13, 0.15);
        try {
            iterate_map(key, probe_length);
            return key;
        } catch (const NonFiniteOrbit&) {
            // escaped the attractor; draw again
        }
    }
}

ChaoticOrbit iterate_map(const SecretKey& key, std::size_t length) {
    validate(key);
    ChaoticOrbit orbit;
    orbit.xs.resize(length);
    orbit.ys.resize(length);
    double x = key.x0;
    double y = key.y0;
    for (std::size_t i = 0; i < length; ++i) {
        const double nx = key.mu1 * x * (1.0 - x) + key.gamma1 * y * y;
        const double ny = key.mu2 * y * (1.0 - y) + key.gamma2 * (x * x + x * y);
        if (!std::isfinite(nx) || !std::isfinite(ny))
            throw NonFiniteOrbit("map diverged at step " + std::to_string(i + 1));
        orbit.xs[i] = nx;
        orbit.ys[i] = ny;
        x = nx;
        y = ny;
    }
    return orbit;
}

IndexVec sort_to_index(std::span<const double> values) {
    if (values.size() > std::numeric_limits<std::uint32_t>::max())
        throw Error("sequence too long for 32-bit indices");
    for (double v : values)
        if (!std::isfinite(v)) throw NonFiniteOrbit("cannot rank a non-finite sequence");
    IndexVec order(values.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [values](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
    return order;
}

Keystreams keystreams_from_orbit(const ChaoticOrbit& orbit) {
    if (orbit.xs.size() != orbit.ys.size())
        throw LengthMismatch("orbit component lengths differ");
    Keystreams ks;
    ks.u = sort_to_index(orbit.xs);
    ks.v = sort_to_index(orbit.ys);
    ks.k.resize(ks.u.size());
    for (std::size_t i = 0; i < ks.u.size(); ++i)
        ks.k[i] = static_cast<Byte>((ks.u[i] + 1u) & 0xFFu);  // mask of the 1-based rank
    return ks;
}

Keystreams derive_keystreams(const SecretKey& key, std::size_t length) {
    return keystreams_from_orbit(iterate_map(key, length));
}

SecretKey read_key_text(std::istream& in) {
    SecretKey key;
    if (!(in >> key.x0 >> key.y0 >> key.mu1 >> key.mu2 >> key.gamma1 >> key.gamma2))
        throw InvalidKey("key file must contain six decimal numbers");
    validate(key);
    return key;
}

void write_key_text(std::ostream& out, const SecretKey& key) {
    out << std::setprecision(17) << key.x0 << ' ' << key.y0 << ' ' << key.mu1 << ' '
        << key.mu2 << ' ' << key.gamma1 << ' ' << key.gamma2 << '\n';
}

SecretKey load_key_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open key file: " + path);
    return read_key_text(in);
}

void save_key_file(const std::string& path, const SecretKey& key) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write key file: " + path);
    write_key_text(out, key);
    if (!out.flush()) throw IoError("failed writing key file: " + path);
}

void write_keystream_dump(std::ostream& out, const Keystreams& ks) {
    out.write("KSTM", 4);
    wire::put_u64(out, ks.v.size());
    for (std::uint32_t j : ks.v) wire::put_u32(out, j);
    out.write(reinterpret_cast<const char*>(ks.k.data()),
              static_cast<std::streamsize>(ks.k.size()));
}

}  // namespace svbreak
