/*
* LSB substitution steganography over RGB covers
*
* Bit i of a payload replaces the least significant bit of sample i,
* samples taken row-major with R, G, B interleaved per pixel.
*/

#ifndef VCSTEGO_STEGO_HPP
#define VCSTEGO_STEGO_HPP

#include <vcstego/image.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace vcstego {

/**
* Framed bitstream of one share: the frame body is a 16-bit width, a
* 16-bit height (both big-endian) and the share pixels packed MSB-first.
*/
class StegoPayload
   {
   public:
      /// Throws LengthOverflowError if a share side exceeds 65535.
      static StegoPayload from_share(const BinaryImage& share);

      /// Validates the frame and rebuilds the share. Throws BadMagicError,
      /// LengthOverflowError or MalformedPayloadError.
      BinaryImage to_share() const;

      std::span<const std::uint8_t> bits() const noexcept { return m_bits; }
      std::size_t size() const noexcept { return m_bits.size(); }

      explicit StegoPayload(std::vector<std::uint8_t> bits) : m_bits(std::move(bits)) {}

      friend bool operator==(const StegoPayload&, const StegoPayload&) = default;

   private:
      std::vector<std::uint8_t> m_bits;
   };

/// Number of bits obtained by serializing a share of this size.
std::size_t share_payload_bits(std::size_t share_width, std::size_t share_height);

/// One LSB per color sample: 3 * width * height.
constexpr std::size_t capacity(std::size_t width, std::size_t height) { return 3 * width * height; }
inline std::size_t capacity(const RgbImage& cover) { return cover.sample_count(); }

/// Raw LSB replacement of the first bits.size() samples. Throws CapacityError.
RgbImage embed_bits(const RgbImage& cover, std::span<const std::uint8_t> bits);

/// LSBs of the first count samples. Throws CapacityError if count exceeds capacity.
std::vector<std::uint8_t> extract_bits(const RgbImage& stego, std::size_t count);

/// Throws CapacityError with required vs available bit counts.
RgbImage embed(const RgbImage& cover, const StegoPayload& payload);

/**
* Reads the frame header from the first 64 LSBs and returns exactly the
* framed bits. Throws BadMagicError when no frame is present and
* LengthOverflowError when the declared length exceeds capacity.
*/
StegoPayload extract(const RgbImage& stego);

}

#endif
