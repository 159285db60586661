/*
* Lossless ciphertext <-> binary image codec
*/

#include <vcstego/codec.hpp>
#include <vcstego/errors.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace vcstego {

std::vector<std::uint8_t> frame_payload(std::span<const std::uint8_t> body)
   {
   if(body.size() > std::numeric_limits<std::uint32_t>::max())
      throw LengthOverflowError("payload of " + std::to_string(body.size()) +
                                " bytes does not fit a 32-bit frame length");
   const auto len = static_cast<std::uint32_t>(body.size());

   std::vector<std::uint8_t> out(kFrameHeaderBytes + body.size());
   std::copy(kFrameMagic.begin(), kFrameMagic.end(), out.begin());
   out[4] = static_cast<std::uint8_t>(len >> 24);
   out[5] = static_cast<std::uint8_t>(len >> 16);
   out[6] = static_cast<std::uint8_t>(len >> 8);
   out[7] = static_cast<std::uint8_t>(len);
   std::copy(body.begin(), body.end(), out.begin() + kFrameHeaderBytes);
   return out;
   }

std::uint32_t parse_frame_header(std::span<const std::uint8_t, kFrameHeaderBytes> header)
   {
   if(!std::equal(kFrameMagic.begin(), kFrameMagic.end(), header.begin()))
      throw BadMagicError("no payload frame found (magic mismatch)");
   return (std::uint32_t{header[4]} << 24) | (std::uint32_t{header[5]} << 16) |
          (std::uint32_t{header[6]} << 8) | std::uint32_t{header[7]};
   }

std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> bytes)
   {
   std::vector<std::uint8_t> bits(8 * bytes.size());
   for(std::size_t i = 0; i != bytes.size(); ++i)
      for(std::size_t b = 0; b != 8; ++b)
         bits[8 * i + b] = (bytes[i] >> (7 - b)) & 1;
   return bits;
   }

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits)
   {
   std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
   for(std::size_t i = 0; i != bits.size(); ++i)
      bytes[i / 8] |= static_cast<std::uint8_t>((bits[i] & 1) << (7 - i % 8));
   return bytes;
   }

ImageSize encimg_size(std::size_t frame_bits)
   {
   std::size_t side = 0;
   while(side * side < frame_bits)
      ++side;
   const std::size_t width = std::max<std::size_t>(8, (side + 7) / 8 * 8);
   return ImageSize{width, (frame_bits + width - 1) / width};
   }

BinaryImage ciphertext_to_image(std::span<const std::uint8_t> ciphertext)
   {
   if(ciphertext.empty())
      throw EmptyInputError("cannot encode an empty ciphertext");

   auto bits = bytes_to_bits(frame_payload(ciphertext));
   const ImageSize size = encimg_size(bits.size());
   bits.resize(size.width * size.height, 0);
   return BinaryImage(size.width, size.height, std::move(bits));
   }

std::vector<std::uint8_t> image_to_ciphertext(const BinaryImage& img)
   {
   const auto bits = img.bits();
   if(bits.size() < 32)
      throw BadMagicError("image too small to carry a payload frame");
   if(bits.size() < kFrameHeaderBits)
      {
      // magic check first so non-payload images report BadMagic
      std::array<std::uint8_t, kFrameHeaderBytes> header{};
      const auto head = bits_to_bytes(bits.first(32));
      std::copy(head.begin(), head.end(), header.begin());
      parse_frame_header(header);
      throw LengthOverflowError("image ends inside the frame header");
      }

   const auto header_bytes = bits_to_bytes(bits.first(kFrameHeaderBits));
   const std::uint32_t len = parse_frame_header(
      std::span<const std::uint8_t, kFrameHeaderBytes>(header_bytes.data(), kFrameHeaderBytes));

   const std::size_t available = (bits.size() - kFrameHeaderBits) / 8;
   if(len > available)
      throw LengthOverflowError("frame declares " + std::to_string(len) + " bytes but image holds " +
                                std::to_string(available));

   return bits_to_bytes(bits.subspan(kFrameHeaderBits, 8 * std::size_t{len}));
   }

}
