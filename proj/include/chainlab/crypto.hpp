// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>

#include "chainlab/bytes.hpp"
#include "chainlab/sha256.hpp"

namespace chainlab {

/// Pluggable signature scheme. The protocol code only relies on the contract:
/// deterministic signatures (the VRF is built from them), public-key
/// verification, and verify() returning false rather than aborting on
/// malformed input.
class SignatureScheme {
public:
    virtual ~SignatureScheme() = default;
    virtual Bytes derive_public(ByteView secret) const = 0;
    virtual Bytes sign(ByteView secret, ByteView message) const = 0;
    virtual bool verify(ByteView public_key, ByteView message, ByteView signature) const = 0;
};

// Simulation-grade default: keys and signatures are domain-separated SHA-256
// values. Signatures bind (pk, message) and are deterministic; unforgeability
// holds only against the simulated adversary, which never fabricates
// messages on behalf of other nodes.
class HashSigScheme final : public SignatureScheme {
public:
    Bytes derive_public(ByteView secret) const override {
        Sha256 h;
        h.update("chainlab.pk/");
        h.update(secret);
        Digest256 d = h.finish();
        return Bytes(d.bytes.begin(), d.bytes.end());
    }

    Bytes sign(ByteView secret, ByteView message) const override {
        return sig_over(derive_public(secret), message);
    }

    bool verify(ByteView public_key, ByteView message, ByteView signature) const override {
        if (public_key.size() != 32 || signature.size() != 32) return false;
        Bytes expect = sig_over(Bytes(public_key.begin(), public_key.end()), message);
        return Bytes(signature.begin(), signature.end()) == expect;
    }

private:
    static Bytes sig_over(const Bytes& pk, ByteView message) {
        Sha256 h;
        h.update("chainlab.sig/");
        h.update(pk);
        h.update(message);
        Digest256 d = h.finish();
        return Bytes(d.bytes.begin(), d.bytes.end());
    }
};

inline const SignatureScheme& default_scheme() {
    static const HashSigScheme scheme;
    return scheme;
}

struct KeyPair {
    Bytes secret;
    Bytes public_key;

    /// Short identity string derived from the public key.
    std::string identity() const {
        return to_hex(ByteView(public_key.data(), std::min<size_t>(8, public_key.size())));
    }
};

inline KeyPair keygen(ByteView seed, const SignatureScheme& scheme = default_scheme()) {
    KeyPair kp;
    kp.secret = Bytes(seed.begin(), seed.end());
    kp.public_key = scheme.derive_public(seed);
    return kp;
}

inline KeyPair keygen(uint64_t seed, const SignatureScheme& scheme = default_scheme()) {
    ByteWriter w;
    w.u64(seed);
    return keygen(w.bytes(), scheme);
}

inline Bytes sign(ByteView secret, ByteView message,
                  const SignatureScheme& scheme = default_scheme()) {
    return scheme.sign(secret, message);
}

inline bool verify(ByteView public_key, ByteView message, ByteView signature,
                   const SignatureScheme& scheme = default_scheme()) {
    return scheme.verify(public_key, message, signature);
}

/// VRF output: `value / 2^64` is the uniform fraction used by sortition and
/// the proof lets anyone holding the public key and input re-check it.
struct VrfOutput {
    uint64_t value = 0;
    Bytes proof;

    bool operator==(const VrfOutput&) const = default;
};

// The VRF is hash-of-deterministic-signature: proof = sign(sk, input),
// value = first 8 bytes of H(proof), big-endian.
inline VrfOutput vrf_evaluate(ByteView secret, ByteView input,
                              const SignatureScheme& scheme = default_scheme()) {
    VrfOutput out;
    out.proof = scheme.sign(secret, input);
    out.value = digest_prefix_u64(sha256(out.proof));
    return out;
}

inline bool vrf_verify(ByteView public_key, ByteView input, const VrfOutput& out,
                       const SignatureScheme& scheme = default_scheme()) {
    if (!scheme.verify(public_key, input, out.proof)) return false;
    return out.value == digest_prefix_u64(sha256(out.proof));
}

}  // namespace chainlab
