#include "test_util.hpp"

#include <vcstego/errors.hpp>
#include <vcstego/vcs.hpp>

#include <doctest.h>

#include <bit>

using namespace vcstego;

namespace {

BinaryImage single(std::uint8_t v)
   {
   return BinaryImage(1, 1, {v});
   }

}

TEST_CASE("vcs: white pixel gives identical blocks with two black subpixels")
   {
   for(std::uint64_t seed = 0; seed != 50; ++seed)
      {
      const SharePair p = split(single(0), seed);
      REQUIRE(p.sh1.width() == 2);
      REQUIRE(p.sh1.height() == 2);
      CHECK(block_pattern(p.sh1, 0, 0) == block_pattern(p.sh2, 0, 0));
      CHECK(std::popcount(unsigned(block_pattern(p.sh1, 0, 0))) == 2);
      }
   }

TEST_CASE("vcs: black pixel gives complementary blocks")
   {
   for(std::uint64_t seed = 0; seed != 50; ++seed)
      {
      const SharePair p = split(single(1), seed);
      CHECK(block_pattern(p.sh1, 0, 0) == (~block_pattern(p.sh2, 0, 0) & 0xF));
      CHECK(std::popcount(unsigned(block_pattern(p.sh2, 0, 0))) == 2);
      }
   }

TEST_CASE("vcs: pattern set is closed under complement")
   {
   for(std::uint8_t p : kSharePatterns)
      {
      CHECK(std::popcount(unsigned(p)) == 2);
      CHECK(std::find(kSharePatterns.begin(), kSharePatterns.end(), std::uint8_t(~p & 0xF)) !=
            kSharePatterns.end());
      }
   }

TEST_CASE("vcs: determinism")
   {
   Xoshiro256 rng(1);
   const BinaryImage s = test::random_binary(rng, 17, 9);
   const SharePair a = split(s, 42);
   const SharePair b = split(s, 42);
   CHECK(a.sh1 == b.sh1);
   CHECK(a.sh2 == b.sh2);
   CHECK_FALSE(split(s, 43).sh1 == a.sh1);
   }

TEST_CASE("vcs: OR stacking contrast")
   {
   Xoshiro256 rng(2);
   const BinaryImage s = test::random_binary(rng, 20, 20);
   const SharePair p = split(s, 3);
   const BinaryImage stacked = superimpose_or(p.sh1, p.sh2);
   for(std::size_t by = 0; by != 20; ++by)
      for(std::size_t bx = 0; bx != 20; ++bx)
         CHECK(std::popcount(unsigned(block_pattern(stacked, bx, by))) == (s.at(bx, by) ? 4 : 2));

   const BinaryImage white(p.sh1.width(), p.sh1.height());
   CHECK(superimpose_or(p.sh1, white) == p.sh1);
   }

TEST_CASE("vcs: XOR stacking")
   {
   Xoshiro256 rng(4);
   const BinaryImage s = test::random_binary(rng, 12, 7);
   const SharePair p = split(s, 5);
   const BinaryImage x = superimpose_xor(p.sh1, p.sh2);
   for(std::size_t by = 0; by != 7; ++by)
      for(std::size_t bx = 0; bx != 12; ++bx)
         CHECK(block_pattern(x, bx, by) == (s.at(bx, by) ? 0xF : 0x0));
   CHECK(superimpose_xor(p.sh1, p.sh1).count_black() == 0);
   CHECK_THROWS_AS(superimpose_xor(p.sh1, BinaryImage(2, 2)), DimensionMismatchError);
   CHECK_THROWS_AS(superimpose_or(p.sh1, BinaryImage(2, 2)), DimensionMismatchError);
   }

TEST_CASE("vcs: reconstruction")
   {
   Xoshiro256 rng(6);
   const BinaryImage s = test::random_binary(rng, 64, 64);
   for(std::uint64_t seed = 0; seed != 100; ++seed)
      REQUIRE(reconstruct_secret(split(s, seed)) == s);
   for(int i = 0; i != 200; ++i)
      {
      const BinaryImage t = test::random_binary(rng, 1 + rng.uniform(40), 1 + rng.uniform(40));
      const SharePair p = split(t, rng.next());
      REQUIRE(reconstruct_secret(p.sh2, p.sh1) == t);
      }
   }

TEST_CASE("vcs: every share block has constant weight")
   {
   Xoshiro256 rng(7);
   const BinaryImage s = test::random_binary(rng, 30, 30);
   const SharePair p = split(s, 8);
   for(std::size_t by = 0; by != 30; ++by)
      for(std::size_t bx = 0; bx != 30; ++bx)
         {
         REQUIRE(std::popcount(unsigned(block_pattern(p.sh1, bx, by))) == 2);
         REQUIRE(std::popcount(unsigned(block_pattern(p.sh2, bx, by))) == 2);
         }
   CHECK(p.sh1.count_black() == 2 * 30 * 30);
   }

TEST_CASE("vcs: flipped subpixel is detected")
   {
   Xoshiro256 rng(9);
   const BinaryImage s = test::random_binary(rng, 8, 8);
   SharePair p = split(s, 10);
   p.sh2.set(5, 3, p.sh2.at(5, 3) ^ 1);
   CHECK_THROWS_AS(reconstruct_secret(p), InconsistentBlockError);
   }

TEST_CASE("vcs: invalid inputs")
   {
   CHECK_THROWS_AS(split(BinaryImage(), 1), EmptyImageError);
   CHECK_THROWS_AS(reconstruct_secret(BinaryImage(3, 2), BinaryImage(3, 2)), DimensionMismatchError);
   CHECK_THROWS_AS(reconstruct_secret(BinaryImage(4, 2), BinaryImage(2, 4)), DimensionMismatchError);
   }

TEST_CASE("vcs: pattern choice covers all six patterns")
   {
   std::array<int, 16> seen{};
   const SharePair p = split(BinaryImage(50, 50), 11);
   for(std::size_t by = 0; by != 50; ++by)
      for(std::size_t bx = 0; bx != 50; ++bx)
         ++seen[block_pattern(p.sh1, bx, by)];
   for(std::uint8_t pat : kSharePatterns)
      CHECK(seen[pat] > 300);
   }
