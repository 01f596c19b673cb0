#pragma once

#include <vector>

#include "bsg/errors.hpp"

namespace bsg {

/// A cyclic run of consecutive residues: {start, start+1, ..., start+length-1}
/// reduced modulo `modulus`. Membership, cardinality and disjointness are O(1).
struct ModInterval {
    long long start = 0;
    long long length = 0;
    long long modulus = 1;

    ModInterval() = default;
    ModInterval(long long s, long long len, long long m) : start(s), length(len), modulus(m) {
        if (m <= 0 || len < 0 || len > m || s < 0 || s >= m)
            throw InvalidInstanceError("malformed modular interval");
    }

    bool empty() const { return length == 0; }
    long long cardinality() const { return length; }

    bool contains(long long v) const {
        if (length == 0) return false;
        long long off = (v - start) % modulus;
        if (off < 0) off += modulus;
        return off < length;
    }

    /// Inclusive last element (undefined on empty intervals).
    long long last() const { return (start + length - 1) % modulus; }

    bool disjoint_from(const ModInterval& o) const {
        if (empty() || o.empty()) return true;
        return !contains(o.start) && !o.contains(start);
    }

    /// Wraps past modulus-1, i.e. covers both modulus-1 and 0.
    bool wraps() const { return length > 0 && start + length > modulus; }

    std::vector<long long> vertices() const {
        std::vector<long long> out;
        out.reserve(static_cast<size_t>(length));
        for (long long i = 0; i < length; ++i) out.push_back((start + i) % modulus);
        return out;
    }

    bool operator==(const ModInterval& o) const = default;
};

}  // namespace bsg
