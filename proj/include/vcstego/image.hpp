/*
* In-memory image types
*/

#ifndef VCSTEGO_IMAGE_HPP
#define VCSTEGO_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vcstego {

/**
* Row-major matrix of 1-bit pixels. A stored 1 is black, 0 is white.
* Carries the ciphertext image, the two shares and extracted bit-planes.
*/
class BinaryImage
   {
   public:
      BinaryImage() = default;

      /// All-white image.
      BinaryImage(std::size_t width, std::size_t height);

      /// Takes ownership of bits; throws DimensionMismatchError if
      /// bits.size() != width * height or any value is not 0/1.
      BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);

      std::size_t width() const noexcept { return m_width; }
      std::size_t height() const noexcept { return m_height; }
      std::size_t size() const noexcept { return m_bits.size(); }
      bool empty() const noexcept { return m_bits.empty(); }

      std::uint8_t at(std::size_t x, std::size_t y) const { return m_bits[y * m_width + x]; }
      void set(std::size_t x, std::size_t y, std::uint8_t v) { m_bits[y * m_width + x] = v & 1; }

      std::span<const std::uint8_t> bits() const noexcept { return m_bits; }

      std::size_t count_black() const noexcept;

      friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

   private:
      std::size_t m_width = 0;
      std::size_t m_height = 0;
      std::vector<std::uint8_t> m_bits;
   };

enum class Channel : std::uint8_t { red = 0, green = 1, blue = 2 };

/**
* Row-major 8-bit RGB image; samples are interleaved R, G, B per pixel.
*/
class RgbImage
   {
   public:
      RgbImage() = default;

      /// Black image.
      RgbImage(std::size_t width, std::size_t height);

      /// Throws DimensionMismatchError if samples.size() != 3 * width * height.
      RgbImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);

      std::size_t width() const noexcept { return m_width; }
      std::size_t height() const noexcept { return m_height; }
      std::size_t pixel_count() const noexcept { return m_width * m_height; }
      std::size_t sample_count() const noexcept { return m_samples.size(); }
      bool empty() const noexcept { return m_samples.empty(); }

      std::uint8_t at(std::size_t x, std::size_t y, Channel c) const
         {
         return m_samples[3 * (y * m_width + x) + static_cast<std::size_t>(c)];
         }
      void set(std::size_t x, std::size_t y, Channel c, std::uint8_t v)
         {
         m_samples[3 * (y * m_width + x) + static_cast<std::size_t>(c)] = v;
         }

      std::span<const std::uint8_t> samples() const noexcept { return m_samples; }
      std::span<std::uint8_t> samples() noexcept { return m_samples; }

      friend bool operator==(const RgbImage&, const RgbImage&) = default;

   private:
      std::size_t m_width = 0;
      std::size_t m_height = 0;
      std::vector<std::uint8_t> m_samples;
   };

/// round(0.299 R + 0.587 G + 0.114 B), exact integer rounding (halves up).
inline std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b)
   {
   return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
   }

/// Row-major luminance bytes, one per pixel.
std::vector<std::uint8_t> luminance_bytes(const RgbImage& img);

}

#endif
