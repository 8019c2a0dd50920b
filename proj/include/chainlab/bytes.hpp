// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chainlab {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_hex(ByteView data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

inline Bytes from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::invalid_argument("from_hex: odd length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("from_hex: bad digit");
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

/// Raised when canonical bytes cannot be parsed back into a structure.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical encoding: integers are fixed-width big-endian, variable-length
// fields carry a 4-byte big-endian length prefix. Composites serialize their
// fields in declared order.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u32(uint32_t v) {
        for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void u64(uint64_t v) {
        for (int i = 7; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void raw(ByteView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

    void var_bytes(ByteView data) {
        if (data.size() > 0xffffffffull) throw std::length_error("var_bytes too long");
        u32(static_cast<uint32_t>(data.size()));
        raw(data);
    }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(ByteView data) : data_(data) {}

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }

    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }

    Bytes raw(size_t n) {
        need(n);
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }

    Bytes var_bytes() {
        uint32_t n = u32();
        return raw(n);
    }

    size_t remaining() const { return data_.size() - pos_; }

    void expect_end() const {
        if (pos_ != data_.size()) throw ParseError("trailing bytes after structure");
    }

private:
    void need(size_t n) const {
        if (data_.size() - pos_ < n) throw ParseError("unexpected end of input");
    }

    ByteView data_;
    size_t pos_ = 0;
};

inline uint64_t be64_from(ByteView data, size_t offset = 0) {
    if (data.size() < offset + 8) throw std::invalid_argument("be64_from: short input");
    uint64_t v = 0;
    for (size_t i = 0; i < 8; ++i) v = (v << 8) | data[offset + i];
    return v;
}

}  // namespace chainlab
