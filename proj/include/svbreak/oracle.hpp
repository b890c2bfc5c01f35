#pragma once

#include <cstddef>
#include <mutex>
#include <span>
#include <vector>

#include "svbreak/cipher.hpp"
#include "svbreak/image_io.hpp"

namespace svbreak {

// Encryption service as seen by an attacker: fixed, hidden key material
// answering arbitrary same-size plaintexts.
class QueryOracle {
  public:
    virtual ~QueryOracle() = default;

    virtual std::size_t length() const = 0;
    virtual ByteVec query(std::span<const Byte> plain) = 0;
};

// One plaintext/ciphertext sample under the holder's key.
struct KnownPair {
    ByteVec p;
    ByteVec c;
};

// Challenge holder for attack experiments. Chosen-plaintext queries are
// linearizable and counted exactly; known-plaintext samples are served
// without touching the counter.
class EncryptionOracle final : public QueryOracle {
  public:
    EncryptionOracle(const SecretKey& key, std::size_t length);

    std::size_t length() const override { return keystreams_.v.size(); }

    // Returns encrypt(plain) and increments the query counter.
    ByteVec query(std::span<const Byte> plain) override;

    std::size_t query_count() const;

    // Plaintext/ciphertext pairs for the given images, in order. Does not
    // count as chosen queries.
    std::vector<KnownPair> known_pairs(const std::vector<GrayImage>& images) const;

    // Ground truth for verification harnesses; attack code must only use
    // the QueryOracle interface.
    const Keystreams& keystreams() const { return keystreams_; }

  private:
    Keystreams keystreams_;
    std::size_t queries_ = 0;
    mutable std::mutex mutex_;
};

}  // namespace svbreak
