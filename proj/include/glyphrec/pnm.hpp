#ifndef GLYPHREC_PNM_HPP
#define GLYPHREC_PNM_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "glyphrec/image.hpp"

namespace glyphrec {

// Raw (binary) PNM support: P5 = 8-bit grayscale, P4 = bitmap.
// P4 rows are packed most-significant-bit first and padded to whole
// bytes; a 1 bit is PNM black, which maps to an on (glyph) pixel.

using PnmImage = std::variant<GrayImage, BinaryImage>;

PnmImage parse_pnm(const std::string& bytes);
PnmImage load_pnm(const std::filesystem::path& path);

std::string encode_p5(const GrayImage& img);
std::string encode_p4(const BinaryImage& img);

void save_p5(const GrayImage& img, const std::filesystem::path& path);
void save_p4(const BinaryImage& img, const std::filesystem::path& path);

} // namespace glyphrec

#endif
