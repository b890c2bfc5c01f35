#pragma once

#include <iosfwd>
#include <string>

#include "svbreak/oracle.hpp"

namespace svbreak {

// Byte mask indexed by cipher position: r[v[i]] = k[i] under the true
// keystreams.
using MaskSequence = ByteVec;

// Dark image plus one single-pixel probe per position; the probe's cipher
// location gives v[i], the dark ciphertext there gives k[i]. Exact recovery
// in 1 + L queries. Throws AmbiguousDifference if a difference image does
// not have exactly one nonzero pixel.
EquivalentKey zhang_method1(QueryOracle& oracle);

// Dark image plus rounds of up to 255 probes carrying the distinct values
// 1..m; the value bijection between plain and cipher differences locates a
// whole round at once. Exact recovery in 1 + ceil(L/255) queries.
EquivalentKey zhang_method2(QueryOracle& oracle);

// One constant-image query p = d: r[j] = c[j] - d (mod 256), so that
// c[j] = d + r[j] at every cipher position.
MaskSequence recover_mask(QueryOracle& oracle, Byte d);

// Number of base-256 digit images needed to address `length` positions:
// the smallest q with 256^q >= length.
std::size_t optimal_index_images(std::size_t length);

// Mask first (one constant query), then the permutation from q base-256
// digit images: image t holds digit t (least significant first) of each
// 0-based position index. Exact recovery in 1 + q queries. Throws
// InvalidIndex when a reassembled index is out of range or collides.
EquivalentKey optimal_cpa(QueryOracle& oracle, Byte d = 0);

// Recovered-key file: "EQKY" magic, L as u64 LE, v as L u32 LE 0-based
// indices, then k as L raw bytes.
void write_equivalent_key(std::ostream& out, const EquivalentKey& ek);
EquivalentKey read_equivalent_key(std::istream& in);
void save_equivalent_key(const std::string& path, const EquivalentKey& ek);
EquivalentKey load_equivalent_key(const std::string& path);

}  // namespace svbreak
