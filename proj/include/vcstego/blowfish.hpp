/*
* Blowfish block cipher, message layer and key derivation
*/

#ifndef VCSTEGO_BLOWFISH_HPP
#define VCSTEGO_BLOWFISH_HPP

#include <vcstego/image.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vcstego {

/// Blowfish key bytes, 4 to 56 bytes (32 to 448 bits).
class KeyMaterial
   {
   public:
      static constexpr std::size_t min_bytes = 4;
      static constexpr std::size_t max_bytes = 56;

      /// Throws KeyLengthError outside [4, 56] bytes.
      explicit KeyMaterial(std::span<const std::uint8_t> key);

      std::span<const std::uint8_t> bytes() const noexcept { return m_bytes; }
      std::size_t size() const noexcept { return m_bytes.size(); }

      friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;

   private:
      std::vector<std::uint8_t> m_bytes;
   };

/// A 64-bit block as two big-endian 32-bit halves.
struct Block
   {
   std::uint32_t left = 0;
   std::uint32_t right = 0;

   static constexpr Block from_u64(std::uint64_t v)
      {
      return Block{static_cast<std::uint32_t>(v >> 32), static_cast<std::uint32_t>(v)};
      }
   constexpr std::uint64_t to_u64() const
      {
      return (static_cast<std::uint64_t>(left) << 32) | right;
      }

   friend bool operator==(const Block&, const Block&) = default;
   };

/**
* Expanded Blowfish key: 18 P-array words and four 256-entry S-boxes
* (4168 bytes). Immutable once built, safe to share between threads.
*/
class KeySchedule
   {
   public:
      static constexpr std::size_t rounds = 16;

      explicit KeySchedule(const KeyMaterial& key);

      /// Round function: ((S1[a] + S2[b]) ^ S3[c]) + S4[d], a = top byte.
      std::uint32_t f(std::uint32_t x) const noexcept
         {
         const std::uint32_t a = x >> 24;
         const std::uint32_t b = (x >> 16) & 0xFF;
         const std::uint32_t c = (x >> 8) & 0xFF;
         const std::uint32_t d = x & 0xFF;
         return ((m_s[0][a] + m_s[1][b]) ^ m_s[2][c]) + m_s[3][d];
         }

      Block encrypt(Block x) const noexcept;
      Block decrypt(Block y) const noexcept;

      std::uint64_t encrypt(std::uint64_t x) const noexcept { return encrypt(Block::from_u64(x)).to_u64(); }
      std::uint64_t decrypt(std::uint64_t y) const noexcept { return decrypt(Block::from_u64(y)).to_u64(); }

      const std::array<std::uint32_t, 18>& p_array() const noexcept { return m_p; }
      const std::array<std::array<std::uint32_t, 256>, 4>& s_boxes() const noexcept { return m_s; }

      friend bool operator==(const KeySchedule&, const KeySchedule&) = default;

   private:
      std::array<std::uint32_t, 18> m_p;
      std::array<std::array<std::uint32_t, 256>, 4> m_s;
   };

inline KeySchedule expand_key(const KeyMaterial& key) { return KeySchedule(key); }

enum class CipherMode { ecb, cbc };

/**
* Pads with PKCS#7 (always at least one byte) and encrypts block by block.
* In CBC mode the 8-byte IV is written in front of the ciphertext.
* Throws EmptyMessageError for an empty message.
*/
std::vector<std::uint8_t> encrypt_message(const KeySchedule& ks,
                                          std::span<const std::uint8_t> message,
                                          CipherMode mode = CipherMode::ecb,
                                          std::uint64_t iv = 0);

/**
* Inverse of encrypt_message. Throws LengthError if the ciphertext is not a
* positive multiple of 8 bytes, PaddingError if the padding is invalid
* (usually a wrong key). Nothing is returned on failure.
*/
std::vector<std::uint8_t> decrypt_message(const KeySchedule& ks,
                                          std::span<const std::uint8_t> ciphertext,
                                          CipherMode mode = CipherMode::ecb);

/// 8 * ceil((n + 1) / 8)
constexpr std::size_t padded_length(std::size_t message_bytes)
   {
   return 8 * ((message_bytes + 8) / 8);
   }

enum class KeyImageMode
   {
   supplement, ///< key image fold XORed with the cyclic user key
   replace,    ///< key image fold alone
   };

/// 56-byte XOR fold of the key image luminance stream:
/// acc[i % 56] ^= rotl8(lum[i], i % 8).
std::array<std::uint8_t, 56> fold_key_image(const RgbImage& kimg);

/**
* Builds cipher key material from a passphrase and an optional key image.
* Without a key image the passphrase is used as is, truncated to 56 bytes
* or cyclically extended to 4. With one, the result is the 56-byte fold
* XORed with the cyclically repeated passphrase (or the fold alone in
* replace mode). Throws EmptyKeyError when no key bytes are available.
*/
KeyMaterial derive_key(std::span<const std::uint8_t> user_key,
                       const std::optional<RgbImage>& kimg,
                       KeyImageMode mode = KeyImageMode::supplement);

}

#endif
