/*
* Lossless ciphertext <-> binary image codec
*
* A payload is framed as "SVC1" || u32 big-endian length || body and its
* bits are laid out MSB-first, row-major; a 1 bit is a black pixel.
*/

#ifndef VCSTEGO_CODEC_HPP
#define VCSTEGO_CODEC_HPP

#include <vcstego/image.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace vcstego {

inline constexpr std::array<std::uint8_t, 4> kFrameMagic = {'S', 'V', 'C', '1'};
inline constexpr std::size_t kFrameHeaderBytes = 8;
inline constexpr std::size_t kFrameHeaderBits = 8 * kFrameHeaderBytes;

/// magic || length || body. Throws LengthOverflowError above 2^32 - 1 bytes.
std::vector<std::uint8_t> frame_payload(std::span<const std::uint8_t> body);

/// Checks the magic of a (possibly partial) frame header and returns the
/// declared body length. Throws BadMagicError.
std::uint32_t parse_frame_header(std::span<const std::uint8_t, kFrameHeaderBytes> header);

/// MSB-first expansion, one 0/1 value per element.
std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> bytes);

/// Inverse of bytes_to_bits; a trailing partial byte is zero-padded.
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

struct ImageSize
   {
   std::size_t width = 0;
   std::size_t height = 0;
   };

/// width = ceil(sqrt(bits)) rounded up to a multiple of 8,
/// height = ceil(bits / width).
ImageSize encimg_size(std::size_t frame_bits);

/// Throws EmptyInputError on empty input.
BinaryImage ciphertext_to_image(std::span<const std::uint8_t> ciphertext);

/**
* Returns the framed body. Throws BadMagicError if the image does not
* start with the frame magic, LengthOverflowError if the declared length
* needs more bits than the image holds.
*/
std::vector<std::uint8_t> image_to_ciphertext(const BinaryImage& img);

}

#endif
