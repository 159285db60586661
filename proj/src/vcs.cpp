/*
* (2,2) visual cryptography with 2x2 pixel expansion
*/

#include <vcstego/errors.hpp>
#include <vcstego/rng.hpp>
#include <vcstego/vcs.hpp>

#include <string>

namespace vcstego {

namespace {

void put_block(BinaryImage& share, std::size_t bx, std::size_t by, std::uint8_t mask)
   {
   const std::size_t x = bx * kExpansion;
   const std::size_t y = by * kExpansion;
   share.set(x, y, (mask >> 3) & 1);
   share.set(x + 1, y, (mask >> 2) & 1);
   share.set(x, y + 1, (mask >> 1) & 1);
   share.set(x + 1, y + 1, mask & 1);
   }

void require_same_size(const BinaryImage& a, const BinaryImage& b)
   {
   if(a.width() != b.width() || a.height() != b.height())
      throw DimensionMismatchError("shares differ in size: " + std::to_string(a.width()) + "x" +
                                   std::to_string(a.height()) + " vs " +
                                   std::to_string(b.width()) + "x" + std::to_string(b.height()));
   }

template<typename Op>
BinaryImage combine(const BinaryImage& a, const BinaryImage& b, Op op)
   {
   require_same_size(a, b);
   std::vector<std::uint8_t> out(a.size());
   const auto x = a.bits();
   const auto y = b.bits();
   for(std::size_t i = 0; i != out.size(); ++i)
      out[i] = op(x[i], y[i]);
   return BinaryImage(a.width(), a.height(), std::move(out));
   }

}

SharePair split(const BinaryImage& secret, std::uint64_t seed)
   {
   if(secret.empty())
      throw EmptyImageError("cannot split an empty secret image");

   Xoshiro256 rng(seed);
   SharePair pair{BinaryImage(secret.width() * kExpansion, secret.height() * kExpansion),
                  BinaryImage(secret.width() * kExpansion, secret.height() * kExpansion),
                  kExpansion};

   for(std::size_t y = 0; y != secret.height(); ++y)
      {
      for(std::size_t x = 0; x != secret.width(); ++x)
         {
         const std::uint8_t p = kSharePatterns[rng.uniform(kSharePatterns.size())];
         put_block(pair.sh1, x, y, p);
         put_block(pair.sh2, x, y, secret.at(x, y) ? static_cast<std::uint8_t>(~p & 0xF) : p);
         }
      }
   return pair;
   }

BinaryImage superimpose_or(const BinaryImage& sh1, const BinaryImage& sh2)
   {
   return combine(sh1, sh2, [](std::uint8_t a, std::uint8_t b) { return std::uint8_t(a | b); });
   }

BinaryImage superimpose_xor(const BinaryImage& sh1, const BinaryImage& sh2)
   {
   return combine(sh1, sh2, [](std::uint8_t a, std::uint8_t b) { return std::uint8_t(a ^ b); });
   }

std::uint8_t block_pattern(const BinaryImage& share, std::size_t bx, std::size_t by)
   {
   const std::size_t x = bx * kExpansion;
   const std::size_t y = by * kExpansion;
   return static_cast<std::uint8_t>((share.at(x, y) << 3) | (share.at(x + 1, y) << 2) |
                                    (share.at(x, y + 1) << 1) | share.at(x + 1, y + 1));
   }

BinaryImage reconstruct_secret(const BinaryImage& sh1, const BinaryImage& sh2)
   {
   const BinaryImage combined = superimpose_xor(sh1, sh2);
   if(combined.width() % kExpansion != 0 || combined.height() % kExpansion != 0)
      throw DimensionMismatchError("share dimensions are not a multiple of the 2x2 expansion");

   BinaryImage secret(combined.width() / kExpansion, combined.height() / kExpansion);
   for(std::size_t by = 0; by != secret.height(); ++by)
      {
      for(std::size_t bx = 0; bx != secret.width(); ++bx)
         {
         const std::uint8_t mask = block_pattern(combined, bx, by);
         if(mask == 0xF)
            secret.set(bx, by, 1);
         else if(mask != 0)
            throw InconsistentBlockError("combined block at (" + std::to_string(bx) + ", " +
                                         std::to_string(by) + ") is neither black nor white");
         }
      }
   return secret;
   }

BinaryImage reconstruct_secret(const SharePair& pair)
   {
   return reconstruct_secret(pair.sh1, pair.sh2);
   }

}
