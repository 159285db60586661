/*
* (2,2) visual cryptography with 2x2 pixel expansion
*/

#ifndef VCSTEGO_VCS_HPP
#define VCSTEGO_VCS_HPP

#include <vcstego/image.hpp>

#include <array>
#include <cstdint>

namespace vcstego {

/**
* The six 2x2 subpixel patterns with exactly two black subpixels, as
* 4-bit masks: bit 3 top-left, bit 2 top-right, bit 1 bottom-left,
* bit 0 bottom-right. Each pattern's complement is also in the set.
*/
inline constexpr std::array<std::uint8_t, 6> kSharePatterns = {
   0b1100, // top row
   0b0011, // bottom row
   0b1010, // left column
   0b0101, // right column
   0b1001, // main diagonal
   0b0110, // anti-diagonal
   };

inline constexpr std::size_t kExpansion = 2;

struct SharePair
   {
   BinaryImage sh1;
   BinaryImage sh2;
   std::size_t expansion = kExpansion;
   };

/**
* Splits a secret into two shares twice its width and height. A white
* pixel gets the same random pattern in both shares, a black pixel gets
* complementary patterns. Throws EmptyImageError on an empty secret.
*/
SharePair split(const BinaryImage& secret, std::uint64_t seed);

/// Pixelwise OR (transparency stacking). Throws DimensionMismatchError.
BinaryImage superimpose_or(const BinaryImage& sh1, const BinaryImage& sh2);

/// Pixelwise XOR. Throws DimensionMismatchError.
BinaryImage superimpose_xor(const BinaryImage& sh1, const BinaryImage& sh2);

/**
* XOR-combines the shares and collapses each 2x2 block to one pixel.
* Throws InconsistentBlockError when a block is not uniformly black or
* white, and DimensionMismatchError for odd or unequal share sizes.
*/
BinaryImage reconstruct_secret(const SharePair& pair);
BinaryImage reconstruct_secret(const BinaryImage& sh1, const BinaryImage& sh2);

/// 4-bit pattern mask of the 2x2 block at block coordinates (bx, by).
std::uint8_t block_pattern(const BinaryImage& share, std::size_t bx, std::size_t by);

}

#endif
