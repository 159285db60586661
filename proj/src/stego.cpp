/*
* LSB substitution steganography over RGB covers
*/

#include <vcstego/codec.hpp>
#include <vcstego/errors.hpp>
#include <vcstego/stego.hpp>

#include <string>

namespace vcstego {

namespace {

constexpr std::size_t kShareHeaderBytes = 4;
constexpr std::size_t kMaxShareSide = 0xFFFF;

std::size_t packed_bytes(std::size_t bits) { return (bits + 7) / 8; }

}

std::size_t share_payload_bits(std::size_t share_width, std::size_t share_height)
   {
   return kFrameHeaderBits + 8 * (kShareHeaderBytes + packed_bytes(share_width * share_height));
   }

StegoPayload StegoPayload::from_share(const BinaryImage& share)
   {
   if(share.width() > kMaxShareSide || share.height() > kMaxShareSide)
      throw LengthOverflowError("share " + std::to_string(share.width()) + "x" +
                                std::to_string(share.height()) +
                                " exceeds the 16-bit dimension fields");

   std::vector<std::uint8_t> body;
   body.reserve(kShareHeaderBytes + packed_bytes(share.size()));
   body.push_back(static_cast<std::uint8_t>(share.width() >> 8));
   body.push_back(static_cast<std::uint8_t>(share.width()));
   body.push_back(static_cast<std::uint8_t>(share.height() >> 8));
   body.push_back(static_cast<std::uint8_t>(share.height()));
   const auto pixels = bits_to_bytes(share.bits());
   body.insert(body.end(), pixels.begin(), pixels.end());

   return StegoPayload(bytes_to_bits(frame_payload(body)));
   }

BinaryImage StegoPayload::to_share() const
   {
   const BinaryImage as_image(m_bits.size(), 1, m_bits);
   const auto body = image_to_ciphertext(as_image);
   if(body.size() < kShareHeaderBytes)
      throw MalformedPayloadError("share payload is shorter than its dimension header");

   const std::size_t width = (std::size_t{body[0]} << 8) | body[1];
   const std::size_t height = (std::size_t{body[2]} << 8) | body[3];
   if(body.size() != kShareHeaderBytes + packed_bytes(width * height))
      throw MalformedPayloadError("share of " + std::to_string(width) + "x" + std::to_string(height) +
                                  " does not match a payload body of " +
                                  std::to_string(body.size()) + " bytes");

   auto bits = bytes_to_bits(std::span<const std::uint8_t>(body).subspan(kShareHeaderBytes));
   bits.resize(width * height);
   return BinaryImage(width, height, std::move(bits));
   }

RgbImage embed_bits(const RgbImage& cover, std::span<const std::uint8_t> bits)
   {
   if(bits.size() > capacity(cover))
      throw CapacityError(bits.size(), capacity(cover));

   RgbImage stego = cover;
   auto samples = stego.samples();
   for(std::size_t i = 0; i != bits.size(); ++i)
      samples[i] = static_cast<std::uint8_t>((samples[i] & 0xFE) | (bits[i] & 1));
   return stego;
   }

std::vector<std::uint8_t> extract_bits(const RgbImage& stego, std::size_t count)
   {
   if(count > capacity(stego))
      throw CapacityError(count, capacity(stego));
   const auto samples = stego.samples();
   std::vector<std::uint8_t> bits(count);
   for(std::size_t i = 0; i != count; ++i)
      bits[i] = samples[i] & 1;
   return bits;
   }

RgbImage embed(const RgbImage& cover, const StegoPayload& payload)
   {
   return embed_bits(cover, payload.bits());
   }

StegoPayload extract(const RgbImage& stego)
   {
   if(capacity(stego) < kFrameHeaderBits)
      throw BadMagicError("cover too small to hold a payload frame");

   const auto header_bits = extract_bits(stego, kFrameHeaderBits);
   const auto header = bits_to_bytes(header_bits);
   const std::uint32_t len = parse_frame_header(
      std::span<const std::uint8_t, kFrameHeaderBytes>(header.data(), kFrameHeaderBytes));

   const std::size_t total = kFrameHeaderBits + 8 * std::size_t{len};
   if(total > capacity(stego))
      throw LengthOverflowError("embedded frame declares " + std::to_string(total) +
                                " bits but the image holds " + std::to_string(capacity(stego)));
   return StegoPayload(extract_bits(stego, total));
   }

}
