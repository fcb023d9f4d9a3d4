#include "glyphrec/pnm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace glyphrec {

namespace {

// Header scanner tracking the byte offset for error reporting. PNM headers
// allow '#' comments and arbitrary whitespace between tokens.
struct HeaderReader {
    const std::string& bytes;
    std::size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < bytes.size()) {
            char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    int read_int(const char* what) {
        skip_space_and_comments();
        if (pos >= bytes.size() || !std::isdigit(static_cast<unsigned char>(bytes[pos])))
            throw ParseError(std::string("PNM: expected ") + what, pos);
        long v = 0;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1'000'000'000L) throw ParseError("PNM: value out of range", pos);
            ++pos;
        }
        return static_cast<int>(v);
    }

    // Exactly one whitespace byte separates the header from the raster.
    void expect_raster_separator() {
        if (pos >= bytes.size() ||
            !std::isspace(static_cast<unsigned char>(bytes[pos])))
            throw ParseError("PNM: missing separator before raster", pos);
        ++pos;
    }
};

} // namespace

PnmImage parse_pnm(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw ParseError("PNM: bad magic", 0);
    char kind = bytes[1];
    if (kind != '4' && kind != '5')
        throw ParseError("PNM: only raw P4/P5 supported", 1);

    HeaderReader hr{bytes, 2};
    int width = hr.read_int("width");
    int height = hr.read_int("height");
    if (width < 1 || height < 1)
        throw ParseError("PNM: dimensions must be >= 1", hr.pos);

    if (kind == '5') {
        int maxval = hr.read_int("maxval");
        if (maxval < 1 || maxval > 255)
            throw ParseError("PNM: only 8-bit P5 supported", hr.pos);
        hr.expect_raster_separator();
        std::size_t need = static_cast<std::size_t>(width) * height;
        if (bytes.size() - hr.pos < need)
            throw ParseError("PNM: truncated raster", bytes.size());
        GrayImage img(width, height);
        for (std::size_t i = 0; i < need; ++i)
            img.pixels[i] = static_cast<std::uint8_t>(bytes[hr.pos + i]);
        return img;
    }

    // P4: rows padded to byte boundaries, MSB first, 1 = black = on.
    hr.expect_raster_separator();
    std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
    std::size_t need = row_bytes * height;
    if (bytes.size() - hr.pos < need)
        throw ParseError("PNM: truncated raster", bytes.size());
    BinaryImage img(width, height);
    for (int y = 0; y < height; ++y) {
        const unsigned char* row =
            reinterpret_cast<const unsigned char*>(bytes.data()) + hr.pos + row_bytes * y;
        for (int x = 0; x < width; ++x) {
            unsigned bit = (row[x / 8] >> (7 - x % 8)) & 1u;
            img.set(x, y, bit != 0);
        }
    }
    return img;
}

PnmImage load_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_pnm(ss.str());
}

std::string encode_p5(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " +
                      std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

std::string encode_p4(const BinaryImage& img) {
    std::string out =
        "P4\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
    std::size_t row_bytes = (static_cast<std::size_t>(img.width) + 7) / 8;
    std::string raster(row_bytes * img.height, '\0');
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (img.at(x, y))
                raster[row_bytes * y + x / 8] |=
                    static_cast<char>(0x80u >> (x % 8));
        }
    }
    out += raster;
    return out;
}

namespace {
void write_binary(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to " + path.string());
}
} // namespace

void save_p5(const GrayImage& img, const std::filesystem::path& path) {
    write_binary(path, encode_p5(img));
}

void save_p4(const BinaryImage& img, const std::filesystem::path& path) {
    write_binary(path, encode_p4(img));
}

} // namespace glyphrec
