/*
* Shared helpers for the unit and acceptance tests
*/

#ifndef VCSTEGO_TEST_UTIL_HPP
#define VCSTEGO_TEST_UTIL_HPP

#include <vcstego/image.hpp>
#include <vcstego/image_io.hpp>
#include <vcstego/rng.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vcstego::test {

inline std::filesystem::path data_dir()
   {
   return std::filesystem::path(VCSTEGO_TEST_DATA_DIR);
   }

inline std::vector<std::filesystem::path> cover_paths()
   {
   std::vector<std::filesystem::path> out;
   for(const auto& e : std::filesystem::directory_iterator(data_dir() / "covers"))
      if(e.path().extension() == ".png")
         out.push_back(e.path());
   std::sort(out.begin(), out.end());
   return out;
   }

inline RgbImage quality_cover(std::string_view name)
   {
   return read_rgb(data_dir() / "quality" / (std::string(name) + ".png"));
   }

inline std::vector<std::uint8_t> from_hex(std::string_view hex)
   {
   std::vector<std::uint8_t> out;
   for(std::size_t i = 0; i + 1 < hex.size(); i += 2)
      out.push_back(static_cast<std::uint8_t>(std::stoul(std::string(hex.substr(i, 2)), nullptr, 16)));
   return out;
   }

inline std::vector<std::uint8_t> bytes_of(std::string_view s)
   {
   return std::vector<std::uint8_t>(s.begin(), s.end());
   }

inline std::vector<std::uint8_t> random_bytes(Xoshiro256& rng, std::size_t n)
   {
   std::vector<std::uint8_t> out(n);
   for(auto& b : out)
      b = static_cast<std::uint8_t>(rng.next() >> 56);
   return out;
   }

inline std::vector<std::uint8_t> random_bits(Xoshiro256& rng, std::size_t n)
   {
   std::vector<std::uint8_t> out(n);
   for(auto& b : out)
      b = static_cast<std::uint8_t>(rng.next() >> 63);
   return out;
   }

inline RgbImage random_rgb(Xoshiro256& rng, std::size_t w, std::size_t h)
   {
   return RgbImage(w, h, random_bytes(rng, 3 * w * h));
   }

inline BinaryImage random_binary(Xoshiro256& rng, std::size_t w, std::size_t h)
   {
   return BinaryImage(w, h, random_bits(rng, w * h));
   }

/// Cover with its whole LSB plane replaced by random bits.
inline RgbImage full_lsb_embed(const RgbImage& cover, std::uint64_t seed)
   {
   Xoshiro256 rng(seed);
   RgbImage out = cover;
   for(auto& s : out.samples())
      s = static_cast<std::uint8_t>((s & 0xFE) | (rng.next() >> 63));
   return out;
   }

/// Each sample independently carries a random message bit with probability `rate`.
inline RgbImage scattered_lsb_embed(const RgbImage& cover, double rate, std::uint64_t seed)
   {
   Xoshiro256 rng(seed);
   RgbImage out = cover;
   for(auto& s : out.samples())
      if(double(rng.next() >> 11) * 0x1.0p-53 < rate)
         s = static_cast<std::uint8_t>((s & 0xFE) | (rng.next() >> 63));
   return out;
   }

}

#endif
