/*
* Blowfish block cipher, message layer and key derivation
*/

#include <vcstego/blowfish.hpp>
#include <vcstego/errors.hpp>

#include "blowfish_tables.hpp"

#include <bit>
#include <string>

namespace vcstego {

namespace {

std::uint64_t load_be64(const std::uint8_t* in)
   {
   std::uint64_t v = 0;
   for(int i = 0; i != 8; ++i)
      v = (v << 8) | in[i];
   return v;
   }

void store_be64(std::uint64_t v, std::uint8_t* out)
   {
   for(int i = 7; i >= 0; --i)
      {
      out[i] = static_cast<std::uint8_t>(v);
      v >>= 8;
      }
   }

}

KeyMaterial::KeyMaterial(std::span<const std::uint8_t> key) :
   m_bytes(key.begin(), key.end())
   {
   if(m_bytes.size() < min_bytes || m_bytes.size() > max_bytes)
      throw KeyLengthError("Blowfish key must be 4 to 56 bytes, got " +
                           std::to_string(m_bytes.size()));
   }

KeySchedule::KeySchedule(const KeyMaterial& key) :
   m_p(detail::kBlowfishInitP), m_s(detail::kBlowfishInitS)
   {
   const auto k = key.bytes();
   std::size_t pos = 0;
   for(auto& p : m_p)
      {
      std::uint32_t word = 0;
      for(int i = 0; i != 4; ++i)
         {
         word = (word << 8) | k[pos];
         pos = (pos + 1) % k.size();
         }
      p ^= word;
      }

   Block block;
   for(std::size_t i = 0; i != m_p.size(); i += 2)
      {
      block = encrypt(block);
      m_p[i] = block.left;
      m_p[i + 1] = block.right;
      }
   for(auto& sbox : m_s)
      {
      for(std::size_t i = 0; i != sbox.size(); i += 2)
         {
         block = encrypt(block);
         sbox[i] = block.left;
         sbox[i + 1] = block.right;
         }
      }
   }

Block KeySchedule::encrypt(Block x) const noexcept
   {
   std::uint32_t l = x.left;
   std::uint32_t r = x.right;
   for(std::size_t i = 0; i != rounds; i += 2)
      {
      l ^= m_p[i];
      r ^= f(l);
      r ^= m_p[i + 1];
      l ^= f(r);
      }
   // after an even number of rounds the halves are already in swapped order
   return Block{r ^ m_p[17], l ^ m_p[16]};
   }

Block KeySchedule::decrypt(Block y) const noexcept
   {
   std::uint32_t l = y.left;
   std::uint32_t r = y.right;
   for(std::size_t i = rounds + 1; i != 1; i -= 2)
      {
      l ^= m_p[i];
      r ^= f(l);
      r ^= m_p[i - 1];
      l ^= f(r);
      }
   return Block{r ^ m_p[0], l ^ m_p[1]};
   }

std::vector<std::uint8_t> encrypt_message(const KeySchedule& ks,
                                          std::span<const std::uint8_t> message,
                                          CipherMode mode,
                                          std::uint64_t iv)
   {
   if(message.empty())
      throw EmptyMessageError("cannot encrypt an empty message");

   const std::size_t body = padded_length(message.size());
   const std::size_t header = (mode == CipherMode::cbc) ? 8 : 0;
   std::vector<std::uint8_t> out(header + body);

   std::copy(message.begin(), message.end(), out.begin() + header);
   const auto pad = static_cast<std::uint8_t>(body - message.size());
   std::fill(out.begin() + header + message.size(), out.end(), pad);

   std::uint64_t chain = iv;
   if(mode == CipherMode::cbc)
      store_be64(iv, out.data());

   for(std::size_t off = header; off != out.size(); off += 8)
      {
      std::uint64_t v = load_be64(&out[off]);
      if(mode == CipherMode::cbc)
         v ^= chain;
      v = ks.encrypt(v);
      chain = v;
      store_be64(v, &out[off]);
      }
   return out;
   }

std::vector<std::uint8_t> decrypt_message(const KeySchedule& ks,
                                          std::span<const std::uint8_t> ciphertext,
                                          CipherMode mode)
   {
   const std::size_t header = (mode == CipherMode::cbc) ? 8 : 0;
   if(ciphertext.size() % 8 != 0 || ciphertext.size() < header + 8)
      throw LengthError("ciphertext length " + std::to_string(ciphertext.size()) +
                        " is not a positive multiple of the 8-byte block");

   std::uint64_t chain = (mode == CipherMode::cbc) ? load_be64(ciphertext.data()) : 0;
   std::vector<std::uint8_t> out(ciphertext.size() - header);
   for(std::size_t off = 0; off != out.size(); off += 8)
      {
      const std::uint64_t c = load_be64(&ciphertext[header + off]);
      std::uint64_t v = ks.decrypt(c);
      if(mode == CipherMode::cbc)
         {
         v ^= chain;
         chain = c;
         }
      store_be64(v, &out[off]);
      }

   const std::uint8_t pad = out.back();
   bool ok = pad >= 1 && pad <= 8;
   for(std::size_t i = 0; ok && i != pad; ++i)
      ok = out[out.size() - 1 - i] == pad;
   if(!ok)
      {
      std::fill(out.begin(), out.end(), std::uint8_t{0});
      throw PaddingError("invalid padding after decryption (wrong key or corrupted ciphertext)");
      }
   out.resize(out.size() - pad);
   return out;
   }

std::array<std::uint8_t, 56> fold_key_image(const RgbImage& kimg)
   {
   std::array<std::uint8_t, 56> acc{};
   const auto lum = luminance_bytes(kimg);
   for(std::size_t i = 0; i != lum.size(); ++i)
      acc[i % acc.size()] ^= std::rotl(lum[i], static_cast<int>(i % 8));
   return acc;
   }

KeyMaterial derive_key(std::span<const std::uint8_t> user_key,
                       const std::optional<RgbImage>& kimg,
                       KeyImageMode mode)
   {
   if(!kimg)
      {
      if(user_key.empty())
         throw EmptyKeyError("no key bytes given");
      std::vector<std::uint8_t> key(user_key.begin(), user_key.end());
      if(key.size() > KeyMaterial::max_bytes)
         key.resize(KeyMaterial::max_bytes);
      for(std::size_t i = key.size(); i < KeyMaterial::min_bytes; ++i)
         key.push_back(user_key[i % user_key.size()]);
      return KeyMaterial(key);
      }

   auto acc = fold_key_image(*kimg);
   if(mode == KeyImageMode::supplement)
      {
      if(user_key.empty())
         throw EmptyKeyError("supplement mode needs a non-empty passphrase");
      for(std::size_t i = 0; i != acc.size(); ++i)
         acc[i] ^= user_key[i % user_key.size()];
      }
   return KeyMaterial(acc);
   }

}
