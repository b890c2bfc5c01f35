#include "svbreak/kpa_attacks.hpp"

#include <limits>
#include <random>
#include <utility>

#include "svbreak/parallel.hpp"

namespace svbreak {

Sdm compute_sdm(std::span<const Byte> column) {
    const std::size_t n = column.size();
    Sdm m;
    m.n = n;
    m.entries.assign(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            const Byte d = mod_sub(column[r], column[c]);
            m.entries[r * n + c] = d;
            m.entries[c * n + r] = d;
        }
    }
    return m;
}

std::string sdm_key(std::span<const Byte> column) {
    const std::size_t n = column.size();
    std::string key;
    key.reserve(n * (n - 1) / 2);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            key.push_back(static_cast<char>(mod_sub(column[r], column[c])));
    return key;
}

bool sdm_invariance_check(std::span<const Byte> plain_column,
                          std::span<const Byte> cipher_column) {
    if (plain_column.size() != cipher_column.size())
        throw LengthMismatch("SDM columns must have equal length");
    return compute_sdm(plain_column) == compute_sdm(cipher_column);
}

bool success_threshold(std::uint64_t tau, std::uint64_t length) {
    if (tau > 256) return false;  // a zero factor enters at tau = 257
    std::uint64_t product = 1;
    for (std::uint64_t t = 0; t < tau; ++t) {
        const std::uint64_t factor = 256 - t;
        if (product > std::numeric_limits<std::uint64_t>::max() / factor)
            return true;  // already beyond any representable length
        product *= factor;
        if (product > length) return true;  // remaining factors are >= 1
    }
    return product > length;
}

std::size_t min_known_images(std::uint64_t length) {
    for (std::size_t n = 2;; ++n) {
        const std::uint64_t tau = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        if (success_threshold(tau, length)) return n;
    }
}

namespace {

void check_pairs(const std::vector<KnownPair>& pairs) {
    if (pairs.size() < 2) throw InsufficientPairs("need at least two known pairs");
    const std::size_t length = pairs.front().p.size();
    if (length == 0) throw LengthMismatch("known pairs must not be empty");
    for (const KnownPair& pair : pairs)
        if (pair.p.size() != length || pair.c.size() != length)
            throw LengthMismatch("known pairs have inconsistent lengths");
}

}  // namespace

CandidateIndex CandidateIndex::build(const std::vector<KnownPair>& pairs) {
    check_pairs(pairs);
    const std::size_t n = pairs.size();
    const std::size_t length = pairs.front().c.size();

    std::vector<std::string> keys(length);
    parallel_chunks(length, [&](std::size_t begin, std::size_t end) {
        ByteVec column(n);
        for (std::size_t j = begin; j < end; ++j) {
            for (std::size_t s = 0; s < n; ++s) column[s] = pairs[s].c[j];
            keys[j] = sdm_key(column);
        }
    });

    CandidateIndex index;
    index.buckets.reserve(length);
    for (std::size_t j = 0; j < length; ++j)
        index.buckets[keys[j]].push_back(static_cast<std::uint32_t>(j));
    return index;
}

KpaResult kpa_attack(const std::vector<KnownPair>& pairs, std::uint64_t seed) {
    check_pairs(pairs);
    const std::size_t n = pairs.size();
    const std::size_t length = pairs.front().p.size();

    const CandidateIndex index = CandidateIndex::build(pairs);

    std::mt19937_64 rng(seed);
    std::vector<char> consumed(length, 0);
    std::vector<std::uint32_t> deferred;
    std::vector<std::uint32_t> live;
    KpaResult result;
    result.key.v.assign(length, 0);
    result.key.k.resize(length);

    ByteVec column(n);
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t s = 0; s < n; ++s) column[s] = pairs[s].p[i];
        const auto it = index.buckets.find(sdm_key(column));

        live.clear();
        if (it != index.buckets.end())
            for (std::uint32_t j : it->second)
                if (!consumed[j]) live.push_back(j);

        if (live.empty()) {
            ++result.stats.empty_buckets;
            deferred.push_back(static_cast<std::uint32_t>(i));
            continue;
        }
        if (live.size() == 1)
            ++result.stats.singleton_buckets;
        else
            ++result.stats.multi_buckets;

        const std::uint32_t pick = live[static_cast<std::size_t>(rng() % live.size())];
        consumed[pick] = 1;
        result.key.v[i] = pick;
    }

    // Deferred positions take the remaining cipher positions in shuffled
    // order; this keeps v a permutation whatever the candidate structure.
    std::vector<std::uint32_t> rest;
    rest.reserve(deferred.size());
    for (std::size_t j = 0; j < length; ++j)
        if (!consumed[j]) rest.push_back(static_cast<std::uint32_t>(j));
    for (std::size_t t = rest.size(); t > 1; --t)
        std::swap(rest[t - 1], rest[static_cast<std::size_t>(rng() % t)]);
    for (std::size_t d = 0; d < deferred.size(); ++d)
        result.key.v[deferred[d]] = rest[d];

    for (std::size_t i = 0; i < length; ++i)
        result.key.k[i] = mod_sub(pairs[0].c[result.key.v[i]], pairs[0].p[i]);
    return result;
}

}  // namespace svbreak
