// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <vector>

#include "chainlab/rng.hpp"
#include "chainlab/sha256.hpp"

namespace chainlab {

namespace pvss_detail {

using Int = boost::multiprecision::cpp_int;

// 2^256 + 297 is prime, so every 32-byte secret is a field element.
inline const Int& prime() {
    static const Int p = (Int(1) << 256) + 297;
    return p;
}

inline Int mod(Int a) {
    const Int& p = prime();
    a %= p;
    if (a < 0) a += p;
    return a;
}

inline Int inv_mod(const Int& a) {
    // Fermat: a^(p-2) mod p.
    return boost::multiprecision::powm(mod(a), prime() - 2, prime());
}

// Field elements serialize as fixed-width 33-byte big-endian (p < 2^257).
inline Bytes encode(const Int& v) {
    Bytes out(33, 0);
    Int x = v;
    for (int i = 32; i >= 0 && x > 0; --i) {
        out[i] = static_cast<uint8_t>(x & 0xff);
        x >>= 8;
    }
    return out;
}

inline Int decode(ByteView data) {
    Int x = 0;
    for (uint8_t b : data) x = (x << 8) | b;
    return x;
}

inline Int random_element(RngStream& rng) {
    // 5 * 64 = 320 bits, reduced mod p; bias is ~2^-63, irrelevant here.
    Int x = 0;
    for (int i = 0; i < 5; ++i) x = (x << 64) | rng.next_u64();
    return mod(x);
}

}  // namespace pvss_detail

struct PvssShare {
    uint32_t index = 0;  // 1-based evaluation point
    Bytes value;         // 33-byte field element

    bool operator==(const PvssShare&) const = default;
};

/// A Shamir deal of a 32-byte secret: any t valid shares recover it, t-1
/// reveal nothing. Commitments are share hashes, giving the simulation-grade
/// public verifiability the committee-change protocol needs.
struct PvssDeal {
    uint32_t n = 0;
    uint32_t t = 0;
    std::vector<PvssShare> shares;
    std::vector<Digest256> commitments;
};

struct PvssError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Digest256 pvss_commitment(uint32_t index, ByteView share_value) {
    Sha256 h;
    h.update("chainlab.pvss/");
    ByteWriter w;
    w.u32(index);
    h.update(w.bytes());
    h.update(share_value);
    return h.finish();
}

inline PvssDeal pvss_deal(const Digest256& secret, uint32_t n, uint32_t t, RngStream& rng) {
    using namespace pvss_detail;
    if (t < 1 || t > n) throw PvssError("pvss_deal: need 1 <= t <= n");
    std::vector<Int> coeffs(t);
    coeffs[0] = decode(secret.view());
    for (uint32_t i = 1; i < t; ++i) coeffs[i] = random_element(rng);

    PvssDeal deal;
    deal.n = n;
    deal.t = t;
    for (uint32_t i = 1; i <= n; ++i) {
        // Horner evaluation of the polynomial at x = i.
        Int y = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) y = mod(y * i + *it);
        PvssShare share{i, encode(y)};
        deal.commitments.push_back(pvss_commitment(i, share.value));
        deal.shares.push_back(std::move(share));
    }
    return deal;
}

/// Check one share against the deal's commitments (index is 1-based).
inline bool pvss_verify_share(const PvssDeal& deal, const PvssShare& share) {
    if (share.index < 1 || share.index > deal.n) return false;
    if (deal.commitments.size() != deal.n) return false;
    return pvss_commitment(share.index, share.value) == deal.commitments[share.index - 1];
}

inline Digest256 pvss_recover(const std::vector<PvssShare>& shares, uint32_t t) {
    using namespace pvss_detail;
    std::set<uint32_t> seen;
    for (const auto& s : shares) {
        if (!seen.insert(s.index).second)
            throw PvssError("pvss_recover: duplicate share index (insufficient shares)");
    }
    if (shares.size() < t) throw PvssError("pvss_recover: insufficient shares");

    // Lagrange interpolation at x = 0 over the first t shares.
    Int secret = 0;
    for (uint32_t i = 0; i < t; ++i) {
        Int num = 1, den = 1;
        Int xi = shares[i].index;
        for (uint32_t j = 0; j < t; ++j) {
            if (j == i) continue;
            Int xj = shares[j].index;
            num = mod(num * xj);
            den = mod(den * (xj - xi));
        }
        Int term = mod(decode(shares[i].value) * mod(num * inv_mod(den)));
        secret = mod(secret + term);
    }
    if (secret >> 256 != 0) throw PvssError("pvss_recover: recovered value out of range");

    Digest256 out;
    Bytes enc = encode(secret);
    std::copy(enc.begin() + 1, enc.end(), out.bytes.begin());
    return out;
}

}  // namespace chainlab
