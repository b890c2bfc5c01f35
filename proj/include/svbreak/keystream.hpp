#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "svbreak/errors.hpp"
#include "svbreak/types.hpp"

namespace svbreak {

// Parameters of the 2D coupled logistic map. x0 and y0 must lie strictly
// inside (0,1) and every field must be finite.
struct SecretKey {
    double x0 = 0.0;
    double y0 = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

// Throws InvalidKey when the invariants above are violated.
void validate(const SecretKey& key);

// Draws map parameters from the bounded regime of the coupled map and
// rejects any draw whose orbit leaves the finite range within
// `probe_length` steps. Deterministic for a fixed seed.
SecretKey random_secret_key(std::uint64_t seed, std::size_t probe_length = 65536);

struct ChaoticOrbit {
    std::vector<double> xs;
    std::vector<double> ys;
};

// Per-position key material for a fixed length L. u and v are 0-based
// permutations of {0,...,L-1}; the byte mask is taken from the 1-based
// rank, k[i] = (u[i] + 1) mod 256.
struct Keystreams {
    IndexVec u;
    IndexVec v;
    ByteVec k;
};

// Applies
//   x' = mu1 * x * (1 - x) + gamma1 * y^2
//   y' = mu2 * y * (1 - y) + gamma2 * (x^2 + x * y)
// `length` times starting from (x0, y0). Both components of a step read the
// previous (x, y); the seed pair itself is not part of the orbit.
// Throws NonFiniteOrbit if the map diverges.
ChaoticOrbit iterate_map(const SecretKey& key, std::size_t length);

// Stable ascending argsort: result[j] is the original position of the j-th
// smallest element; equal elements keep their original order.
IndexVec sort_to_index(std::span<const double> values);

// u = sort_to_index(xs), v = sort_to_index(ys), k[i] = (u[i] + 1) mod 256.
Keystreams keystreams_from_orbit(const ChaoticOrbit& orbit);
Keystreams derive_keystreams(const SecretKey& key, std::size_t length);

// Key file: six whitespace-separated decimal literals in the order
// x0 y0 mu1 mu2 gamma1 gamma2.
SecretKey read_key_text(std::istream& in);
void write_key_text(std::ostream& out, const SecretKey& key);
SecretKey load_key_file(const std::string& path);
void save_key_file(const std::string& path, const SecretKey& key);

// Debug dump: "KSTM" magic, L as u64 LE, v as L u32 LE 0-based indices,
// then k as L raw bytes.
void write_keystream_dump(std::ostream& out, const Keystreams& ks);

}  // namespace svbreak
