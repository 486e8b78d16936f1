#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "elax/field.hpp"

namespace elax {

/// ELAX1 field snapshot format (little-endian, byte layout fixed):
///
///   offset  size  content
///   0       5     magic "ELAX1"
///   5       1     dim (u8: 2 or 3)
///   6       1     components (u8)
///   7       1     real-valued flag (u8: 0 or 1)
///   8       4     n, modes per axis (u32 LE)
///   12      4     L, length of the convention note (u32 LE)
///   16      L     convention note, UTF-8, no terminator
///   16+L    ...   coefficients: components * n^dim pairs (re, im) of
///                 f64 LE, component-major, row-major over axis indices
///                 in FFT order (0..n/2-1, -n/2..-1 per axis)
///
/// The note documents the normalization so a snapshot is self-describing.
inline constexpr const char* kSnapshotNote = "coeff-norm: ||e^{ik.x}||_0 = 1";

namespace detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

inline std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8)
         | (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void put_f64(std::ostream& os, double v) {
    static_assert(sizeof(double) == 8);
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

} // namespace detail

inline void write_snapshot(std::ostream& os, const FourierField& f,
                           const std::string& note = kSnapshotNote) {
    os.write("ELAX1", 5);
    const unsigned char hdr[3] = {static_cast<unsigned char>(f.grid().dim),
                                  static_cast<unsigned char>(f.components()),
                                  static_cast<unsigned char>(f.real_valued() ? 1 : 0)};
    os.write(reinterpret_cast<const char*>(hdr), 3);
    detail::put_u32(os, static_cast<std::uint32_t>(f.grid().n));
    detail::put_u32(os, static_cast<std::uint32_t>(note.size()));
    os.write(note.data(), static_cast<std::streamsize>(note.size()));
    for (auto v : f.raw()) {
        detail::put_f64(os, v.real());
        detail::put_f64(os, v.imag());
    }
}

inline void write_snapshot_file(const std::string& path, const FourierField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open snapshot file for writing: " + path);
    write_snapshot(os, f);
}

inline FourierField read_snapshot(std::istream& is) {
    char magic[5];
    is.read(magic, 5);
    if (!is || std::memcmp(magic, "ELAX1", 5) != 0)
        throw ConfigError("snapshot: bad magic (not an ELAX1 file)");
    unsigned char hdr[3];
    is.read(reinterpret_cast<char*>(hdr), 3);
    const int dim = hdr[0], components = hdr[1];
    const bool real_valued = hdr[2] != 0;
    const int n = static_cast<int>(detail::get_u32(is));
    const std::uint32_t note_len = detail::get_u32(is);
    std::string note(note_len, '\0');
    is.read(note.data(), note_len);
    FourierField f(GridSpec(dim, n), components, real_valued);
    for (auto& v : f.raw()) {
        const double re = detail::get_f64(is);
        const double im = detail::get_f64(is);
        v = Complex(re, im);
    }
    if (!is) throw ConfigError("snapshot: truncated file");
    return f;
}

inline FourierField read_snapshot_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open snapshot file: " + path);
    return read_snapshot(is);
}

} // namespace elax
