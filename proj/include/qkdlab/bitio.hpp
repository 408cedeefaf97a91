// Copyright 2026 The qkdlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKDLAB_BITIO_HPP
#define QKDLAB_BITIO_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qkdlab {

enum class BitFileFormat { Ascii, Binary };

inline BitFileFormat bit_file_format(std::string_view name) {
    if (name == "ascii") {
        return BitFileFormat::Ascii;
    }
    if (name == "binary") {
        return BitFileFormat::Binary;
    }
    throw std::invalid_argument("bit_file_format: expected \"ascii\" or \"binary\"");
}

/// Text form: one '0'/'1' per character, line breaks ignored, anything else
/// rejected.
inline std::string decode_ascii_bits(std::string_view raw) {
    std::string bits;
    bits.reserve(raw.size());
    for (char c : raw) {
        if (c == '0' || c == '1') {
            bits.push_back(c);
        } else if (c != '\n' && c != '\r') {
            throw std::invalid_argument("decode_ascii_bits: unexpected character");
        }
    }
    return bits;
}

/// Raw form: each byte contributes 8 bits, most significant bit first.
inline std::string decode_binary_bits(std::string_view raw) {
    std::string bits;
    bits.reserve(raw.size() * 8);
    for (char byte : raw) {
        for (int shift = 7; shift >= 0; --shift) {
            bits.push_back(((static_cast<unsigned char>(byte) >> shift) & 1u) ? '1' : '0');
        }
    }
    return bits;
}

inline std::string read_file_raw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string read_bits_file(const std::filesystem::path& path, BitFileFormat format) {
    const std::string raw = read_file_raw(path);
    return format == BitFileFormat::Ascii ? decode_ascii_bits(raw) : decode_binary_bits(raw);
}

inline void write_bits_ascii(const std::filesystem::path& path, std::string_view bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out << bits << '\n';
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace qkdlab

#endif // QKDLAB_BITIO_HPP
