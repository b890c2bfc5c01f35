#pragma once

#include <span>

#include "svbreak/keystream.hpp"

namespace svbreak {

constexpr Byte mod_add(Byte a, Byte b) {
    return static_cast<Byte>((a + b) & 0xFF);
}

constexpr Byte mod_sub(Byte a, Byte b) {
    return static_cast<Byte>((a - b + 256) & 0xFF);
}

// Everything needed to decrypt: the scatter permutation v (0-based) and the
// byte mask k. Legitimate decryption and attack-recovered keys share this
// type.
struct EquivalentKey {
    IndexVec v;
    ByteVec k;

    bool operator==(const EquivalentKey&) const = default;
};

EquivalentKey equivalent_key(const Keystreams& ks);

// c[v[i]] = p[i] + k[i] (mod 256). Every output position is written exactly
// once since v is a bijection. Throws LengthMismatch.
ByteVec encrypt(std::span<const Byte> plain, const Keystreams& ks);

// p[i] = c[v[i]] - k[i] (mod 256); inverse of encrypt under the matching
// equivalent key. Throws LengthMismatch.
ByteVec decrypt(std::span<const Byte> cipher, const EquivalentKey& ek);

}  // namespace svbreak
