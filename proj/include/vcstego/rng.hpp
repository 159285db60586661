/*
* Reproducible 64-bit PRNG
*/

#ifndef VCSTEGO_RNG_HPP
#define VCSTEGO_RNG_HPP

#include <array>
#include <cstdint>

namespace vcstego {

/// SplitMix64 (Steele, Lea, Flood). Used to seed Xoshiro256.
class SplitMix64
   {
   public:
      explicit constexpr SplitMix64(std::uint64_t seed) : m_state(seed) {}

      constexpr std::uint64_t next()
         {
         std::uint64_t z = (m_state += 0x9E3779B97F4A7C15ULL);
         z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
         z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
         return z ^ (z >> 31);
         }

   private:
      std::uint64_t m_state;
   };

/**
* xoshiro256** 1.0 (Blackman, Vigna). The state is filled from four
* SplitMix64 outputs of the seed, so any seed (including 0) is valid and
* the stream is identical on every platform.
*/
class Xoshiro256
   {
   public:
      using result_type = std::uint64_t;

      explicit constexpr Xoshiro256(std::uint64_t seed)
         {
         SplitMix64 sm(seed);
         for(auto& w : m_s)
            w = sm.next();
         }

      static constexpr result_type min() { return 0; }
      static constexpr result_type max() { return ~result_type{0}; }

      constexpr result_type operator()() { return next(); }

      constexpr std::uint64_t next()
         {
         const std::uint64_t result = rotl(m_s[1] * 5, 7) * 9;
         const std::uint64_t t = m_s[1] << 17;
         m_s[2] ^= m_s[0];
         m_s[3] ^= m_s[1];
         m_s[1] ^= m_s[2];
         m_s[0] ^= m_s[3];
         m_s[2] ^= t;
         m_s[3] = rotl(m_s[3], 45);
         return result;
         }

      /// Uniform integer in [0, n) by rejection; n must be > 0.
      constexpr std::uint64_t uniform(std::uint64_t n)
         {
         const std::uint64_t limit = max() - (max() % n + 1) % n;
         std::uint64_t v = next();
         while(v > limit)
            v = next();
         return v % n;
         }

   private:
      static constexpr std::uint64_t rotl(std::uint64_t x, int k)
         {
         return (x << k) | (x >> (64 - k));
         }

      std::array<std::uint64_t, 4> m_s{};
   };

/// Seed from the OS entropy source.
std::uint64_t entropy_seed();

}

#endif
