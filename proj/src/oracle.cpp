#include "svbreak/oracle.hpp"

namespace svbreak {

EncryptionOracle::EncryptionOracle(const SecretKey& key, std::size_t length)
    : keystreams_(derive_keystreams(key, length)) {}

ByteVec EncryptionOracle::query(std::span<const Byte> plain) {
    std::lock_guard lock(mutex_);
    ByteVec cipher = encrypt(plain, keystreams_);
    ++queries_;  // counted only after a well-formed query
    return cipher;
}

std::size_t EncryptionOracle::query_count() const {
    std::lock_guard lock(mutex_);
    return queries_;
}

std::vector<KnownPair> EncryptionOracle::known_pairs(const std::vector<GrayImage>& images) const {
    std::vector<KnownPair> pairs;
    pairs.reserve(images.size());
    for (const GrayImage& img : images) {
        if (img.size() != keystreams_.v.size())
            throw LengthMismatch("known image size does not match the oracle length");
        pairs.push_back(KnownPair{img.pixels, encrypt(img.pixels, keystreams_)});
    }
    return pairs;
}

}  // namespace svbreak
