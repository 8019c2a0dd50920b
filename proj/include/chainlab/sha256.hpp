// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>

#include "chainlab/bytes.hpp"

namespace chainlab {

/// 32-byte hash value. Equality is byte equality, ordering is lexicographic.
struct Digest256 {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Digest256&) const = default;

    bool is_zero() const {
        for (uint8_t b : bytes)
            if (b != 0) return false;
        return true;
    }

    std::string hex() const { return to_hex(bytes); }

    static Digest256 from_hex(std::string_view h) {
        Bytes raw = chainlab::from_hex(h);
        if (raw.size() != 32) throw std::invalid_argument("Digest256: need 64 hex chars");
        Digest256 d;
        std::memcpy(d.bytes.data(), raw.data(), 32);
        return d;
    }

    ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
};

struct Digest256Hash {
    size_t operator()(const Digest256& d) const {
        uint64_t v;
        std::memcpy(&v, d.bytes.data(), 8);
        return static_cast<size_t>(v);
    }
};

// Plain FIPS 180-4 SHA-256. Verified in the test suite against an
// independent implementation and the published test vectors.
class Sha256 {
public:
    Sha256() { reset(); }

    void reset() {
        state_ = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                  0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
        total_ = 0;
        buf_len_ = 0;
    }

    Sha256& update(ByteView data) {
        total_ += data.size();
        size_t off = 0;
        if (buf_len_ > 0) {
            size_t take = std::min(data.size(), size_t(64) - buf_len_);
            std::memcpy(buf_.data() + buf_len_, data.data(), take);
            buf_len_ += take;
            off += take;
            if (buf_len_ == 64) {
                compress(buf_.data());
                buf_len_ = 0;
            }
        }
        while (data.size() - off >= 64) {
            compress(data.data() + off);
            off += 64;
        }
        if (off < data.size()) {
            std::memcpy(buf_.data(), data.data() + off, data.size() - off);
            buf_len_ = data.size() - off;
        }
        return *this;
    }

    Sha256& update(std::string_view s) {
        return update(ByteView(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
    }

    Digest256 finish() {
        uint64_t bit_len = total_ * 8;
        uint8_t pad = 0x80;
        update(ByteView(&pad, 1));
        uint8_t zero = 0;
        while (buf_len_ != 56) update(ByteView(&zero, 1));
        uint8_t len_be[8];
        for (int i = 0; i < 8; ++i) len_be[i] = static_cast<uint8_t>(bit_len >> (56 - 8 * i));
        update(ByteView(len_be, 8));
        Digest256 out;
        for (int i = 0; i < 8; ++i) {
            out.bytes[4 * i + 0] = static_cast<uint8_t>(state_[i] >> 24);
            out.bytes[4 * i + 1] = static_cast<uint8_t>(state_[i] >> 16);
            out.bytes[4 * i + 2] = static_cast<uint8_t>(state_[i] >> 8);
            out.bytes[4 * i + 3] = static_cast<uint8_t>(state_[i]);
        }
        return out;
    }

private:
    static uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void compress(const uint8_t* block) {
        static constexpr uint32_t k[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        uint32_t w[64];
        for (int i = 0; i < 16; ++i) {
            w[i] = (uint32_t(block[4 * i]) << 24) | (uint32_t(block[4 * i + 1]) << 16) |
                   (uint32_t(block[4 * i + 2]) << 8) | uint32_t(block[4 * i + 3]);
        }
        for (int i = 16; i < 64; ++i) {
            uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
        uint32_t e = state_[4], f = state_[5], g = state_[6], h = state_[7];
        for (int i = 0; i < 64; ++i) {
            uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            uint32_t ch = (e & f) ^ (~e & g);
            uint32_t t1 = h + s1 + ch + k[i] + w[i];
            uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            uint32_t t2 = s0 + maj;
            h = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        state_[0] += a; state_[1] += b; state_[2] += c; state_[3] += d;
        state_[4] += e; state_[5] += f; state_[6] += g; state_[7] += h;
    }

    std::array<uint32_t, 8> state_;
    std::array<uint8_t, 64> buf_;
    uint64_t total_ = 0;
    size_t buf_len_ = 0;
};

inline Digest256 sha256(ByteView data) {
    Sha256 h;
    h.update(data);
    return h.finish();
}

inline Digest256 sha256(std::string_view s) {
    Sha256 h;
    h.update(s);
    return h.finish();
}

/// First 8 digest bytes as a big-endian integer, the uniform-u64 view of a hash.
inline uint64_t digest_prefix_u64(const Digest256& d) {
    return be64_from(d.view());
}

}  // namespace chainlab
