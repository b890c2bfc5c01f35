#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "svbreak/oracle.hpp"

namespace svbreak {

// Symmetric matrix of pairwise mod-256 differences of one pixel position
// across n images, zero on the diagonal. The additive mask cancels in every
// entry, so matched plain/cipher positions share the same matrix.
struct Sdm {
    std::size_t n = 0;
    ByteVec entries;  // n*n, row-major

    Byte at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }

    bool operator==(const Sdm&) const = default;
};

Sdm compute_sdm(std::span<const Byte> column);

// Canonical form: the n*(n-1)/2 upper-triangle entries in row-major order.
// Two SDMs are equal iff their canonical keys are equal bytewise.
std::string sdm_key(std::span<const Byte> column);

// True iff the two columns have equal SDMs. Guaranteed at matched positions
// because the common mask cancels. Throws LengthMismatch.
bool sdm_invariance_check(std::span<const Byte> plain_column,
                          std::span<const Byte> cipher_column);

// True when tau independent difference entries are expected to pin down a
// position uniquely among `length` candidates: requires the falling product
// 256 * 255 * ... * (256 - tau + 1) to exceed `length`. Evaluated in exact
// integer arithmetic; tau >= 257 contributes a zero factor and yields false.
bool success_threshold(std::uint64_t tau, std::uint64_t length);

// Smallest n >= 2 whose difference count tau = n(n-1)/2 satisfies
// success_threshold for `length`.
std::size_t min_known_images(std::uint64_t length);

// Exact-match index over cipher-position SDM keys. Bucket lists are in
// ascending position order; before any consumption every cipher position
// sits in exactly one bucket.
struct CandidateIndex {
    std::unordered_map<std::string, std::vector<std::uint32_t>> buckets;

    static CandidateIndex build(const std::vector<KnownPair>& pairs);
};

struct KpaStats {
    std::size_t singleton_buckets = 0;  // positions decided by a unique candidate
    std::size_t multi_buckets = 0;      // positions decided by a random pick
    std::size_t empty_buckets = 0;      // positions deferred to the final fill
};

struct KpaResult {
    EquivalentKey key;
    KpaStats stats;
};

// Greedy matching of plain-position SDMs against the candidate index, in
// ascending position order, consuming each assigned cipher position.
// Positions with no live candidate are deferred and receive the remaining
// cipher positions in shuffled order, so v is always a valid permutation.
// The mask is read off the first pair: k[i] = c1[v[i]] - p1[i].
//
// Randomness contract (any output-compatible reimplementation must follow
// it): a std::mt19937_64 seeded with `seed` draws exactly once per
// non-empty candidate set, picking live[rng() % live.size()] with the live
// list in ascending position order; the leftover fill shuffles the
// remaining positions (ascending) with a Fisher-Yates loop
// swap(rest[t-1], rest[rng() % t]) for t = size..2.
//
// Throws InsufficientPairs when fewer than two pairs are given and
// LengthMismatch when pair lengths disagree.
KpaResult kpa_attack(const std::vector<KnownPair>& pairs, std::uint64_t seed);

}  // namespace svbreak
