/*
* PNG / BMP file I/O
*/

#ifndef VCSTEGO_IMAGE_IO_HPP
#define VCSTEGO_IMAGE_IO_HPP

#include <vcstego/image.hpp>

#include <filesystem>

namespace vcstego {

/// Reads PNG (any color type, 8 or 16 bit; alpha dropped, gray replicated)
/// or uncompressed 24/32-bit BMP, chosen by file signature.
RgbImage read_rgb(const std::filesystem::path& path);

/// Lossless PNG only. JPEG targets are rejected with ImageIoError since
/// lossy compression destroys the LSB plane.
void write_rgb_png(const std::filesystem::path& path, const RgbImage& img);

/// 1-bit grayscale PNG: black pixels (1) as 0x00, white (0) as 0xFF.
void write_binary_png(const std::filesystem::path& path, const BinaryImage& img);

/// Any readable image; pixels with luminance < 128 are black.
BinaryImage read_binary(const std::filesystem::path& path);

}

#endif
