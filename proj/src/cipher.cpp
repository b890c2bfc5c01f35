#include "svbreak/cipher.hpp"

namespace svbreak {

EquivalentKey equivalent_key(const Keystreams& ks) {
    return EquivalentKey{ks.v, ks.k};
}

ByteVec encrypt(std::span<const Byte> plain, const Keystreams& ks) {
    if (plain.size() != ks.v.size() || plain.size() != ks.k.size())
        throw LengthMismatch("plaintext length does not match the keystreams");
    ByteVec cipher(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i)
        cipher[ks.v[i]] = mod_add(plain[i], ks.k[i]);
    return cipher;
}

ByteVec decrypt(std::span<const Byte> cipher, const EquivalentKey& ek) {
    if (cipher.size() != ek.v.size() || cipher.size() != ek.k.size())
        throw LengthMismatch("ciphertext length does not match the equivalent key");
    ByteVec plain(cipher.size());
    for (std::size_t i = 0; i < cipher.size(); ++i)
        plain[i] = mod_sub(cipher[ek.v[i]], ek.k[i]);
    return plain;
}

}  // namespace svbreak
