#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

namespace hodgemhd {

/// Minimal SHA-1, used for git-style content hashes of run configurations
/// ("blob <len>\0<content>"). Not a security boundary here, just a stable
/// fingerprint for the reproducibility manifest.
inline std::string sha1_hex(const std::string& data) {
    std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};

    std::string msg = data;
    const std::uint64_t bitlen = std::uint64_t(msg.size()) * 8;
    msg.push_back(char(0x80));
    while (msg.size() % 64 != 56) msg.push_back(char(0));
    for (int i = 7; i >= 0; --i) msg.push_back(char((bitlen >> (8 * i)) & 0xFF));

    auto rol = [](std::uint32_t v, int s) { return (v << s) | (v >> (32 - s)); };

    for (std::size_t chunk = 0; chunk < msg.size(); chunk += 64) {
        std::uint32_t w[80];
        for (int i = 0; i < 16; ++i) {
            w[i] = (std::uint32_t(std::uint8_t(msg[chunk + 4 * i])) << 24) |
                   (std::uint32_t(std::uint8_t(msg[chunk + 4 * i + 1])) << 16) |
                   (std::uint32_t(std::uint8_t(msg[chunk + 4 * i + 2])) << 8) |
                   std::uint32_t(std::uint8_t(msg[chunk + 4 * i + 3]));
        }
        for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) {
                f = (b & c) | ((~b) & d);
                k = 0x5A827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            const std::uint32_t tmp = rol(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rol(b, 30);
            b = a;
            a = tmp;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
    }

    char out[41];
    std::snprintf(out, sizeof out, "%08x%08x%08x%08x%08x", h[0], h[1], h[2], h[3], h[4]);
    return std::string(out, 40);
}

/// Hash of a config blob the way git hashes file contents.
inline std::string git_blob_hash(const std::string& content) {
    return sha1_hex("blob " + std::to_string(content.size()) + std::string(1, '\0') + content);
}

} // namespace hodgemhd
