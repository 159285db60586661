#include "test_util.hpp"

#include <vcstego/errors.hpp>
#include <vcstego/metrics.hpp>
#include <vcstego/stego.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <numeric>

using namespace vcstego;

TEST_CASE("metrics: identical images")
   {
   Xoshiro256 rng(41);
   const RgbImage x = test::random_rgb(rng, 9, 9);
   CHECK(mse(x, x, MseVariant::halved) == 0.0);
   CHECK(mse(x, x, MseVariant::standard) == 0.0);
   CHECK_THROWS_AS(psnr(x, x), IdenticalImagesError);
   const MetricsReport r = measure(x, x);
   CHECK_FALSE(r.psnr_db.has_value());
   CHECK(to_csv_row(r).find(",inf,") != std::string::npos);
   }

TEST_CASE("metrics: single sample differing by 2")
   {
   // a 1x1 image has three samples; only one differs
   const RgbImage x(1, 1, {10, 20, 30});
   const RgbImage y(1, 1, {12, 20, 30});
   CHECK(squared_error(x, y) == 4.0);
   CHECK(mse(x, y, MseVariant::halved) == doctest::Approx(4.0 / (2.0 * 3.0)));
   CHECK(mse(x, y, MseVariant::standard) == doctest::Approx(4.0 / 3.0));
   }

TEST_CASE("metrics: psnr")
   {
   CHECK(psnr_from_mse(1.0) == doctest::Approx(48.1308).epsilon(1e-5));
   CHECK(psnr_from_mse(1.0, 16) == doctest::Approx(20.0 * std::log10(65535.0)));
   double prev = 1e9;
   for(double m = 0.001; m < 100; m *= 1.7)
      {
      const double p = psnr_from_mse(m);
      CHECK(p < prev);
      prev = p;
      }
   const RgbImage x(2, 2, std::vector<std::uint8_t>(12, 10));
   const RgbImage y(2, 2, std::vector<std::uint8_t>(12, 11));
   CHECK(psnr(x, y) == doctest::Approx(48.1308).epsilon(1e-5));
   }

TEST_CASE("metrics: symmetry and uniform difference")
   {
   Xoshiro256 rng(42);
   const RgbImage x = test::random_rgb(rng, 20, 10);
   const RgbImage y = test::random_rgb(rng, 20, 10);
   CHECK(mse(x, y) == mse(y, x));
   CHECK(mse(x, y, MseVariant::halved) == doctest::Approx(mse(x, y) / 2.0));

   for(int d : {1, 3, 7})
      {
      RgbImage z = x;
      for(auto& s : z.samples())
         s = static_cast<std::uint8_t>(s < 128 ? s + d : s - d);
      CHECK(mse(x, z, MseVariant::halved) == doctest::Approx(d * d / 2.0));
      }
   CHECK_THROWS_AS(mse(x, RgbImage(10, 20)), DimensionMismatchError);
   }

TEST_CASE("metrics: brute-force recomputation on a real embed")
   {
   const RgbImage cover = read_rgb(test::cover_paths().front());
   Xoshiro256 rng(43);
   const RgbImage stego = embed_bits(cover, test::random_bits(rng, 50000));

   double se = 0;
   std::array<std::array<long, 256>, 3> hc{}, hs{};
   for(std::size_t y = 0; y != cover.height(); ++y)
      for(std::size_t x = 0; x != cover.width(); ++x)
         for(Channel c : {Channel::red, Channel::green, Channel::blue})
            {
            const double d = double(cover.at(x, y, c)) - double(stego.at(x, y, c));
            se += d * d;
            ++hc[std::size_t(c)][cover.at(x, y, c)];
            ++hs[std::size_t(c)][stego.at(x, y, c)];
            }
   long max_delta = 0, l1 = 0;
   for(std::size_t c = 0; c != 3; ++c)
      for(std::size_t v = 0; v != 256; ++v)
         {
         const long d = std::labs(hc[c][v] - hs[c][v]);
         max_delta = std::max(max_delta, d);
         l1 += d;
         }

   const MetricsReport r = measure(cover, stego, 1234);
   const double n = double(cover.sample_count());
   CHECK(r.mse_standard == doctest::Approx(se / n));
   CHECK(r.mse_paper == doctest::Approx(se / (2 * n)));
   REQUIRE(r.psnr_db.has_value());
   CHECK(*r.psnr_db == doctest::Approx(20 * std::log10(255.0 / std::sqrt(se / n))));
   CHECK(r.distance.max_bin_delta == std::uint64_t(max_delta));
   CHECK(r.distance.l1 == std::uint64_t(l1));
   CHECK(r.distance.max_bin_delta <= 50000);
   CHECK(r.message_size_bytes == 1234);
   }

TEST_CASE("metrics: histograms")
   {
   const Histogram h = histogram(RgbImage(7, 3));
   for(const auto& ch : h)
      {
      CHECK(ch[0] == 21);
      for(std::size_t v = 1; v != 256; ++v)
         CHECK(ch[v] == 0);
      }

   Xoshiro256 rng(44);
   const RgbImage cover = test::random_rgb(rng, 30, 30);
   const Histogram hs = histogram(embed_bits(cover, test::random_bits(rng, 2700)));
   for(const auto& ch : hs)
      CHECK(std::accumulate(ch.begin(), ch.end(), std::uint64_t{0}) == 900);

   CHECK(histogram_distance(hs, hs).max_bin_delta == 0);
   CHECK(histogram_distance(hs, hs).l1 == 0);
   Histogram a{}, b{};
   a[1][10] = 5;
   b[1][10] = 4;
   b[1][11] = 1;
   CHECK(histogram_distance(a, b).max_bin_delta == 1);
   CHECK(histogram_distance(a, b).l1 == 2);
   }

TEST_CASE("metrics: report serialization")
   {
   CHECK(metrics_csv_header() == "message_size_bytes,mse_paper,mse_standard,psnr_db,max_bin_delta");
   const RgbImage x(2, 2, std::vector<std::uint8_t>(12, 10));
   const RgbImage y(2, 2, std::vector<std::uint8_t>(12, 11));
   const MetricsReport r = measure(x, y, 12);
   const std::string row = to_csv_row(r);
   CHECK(std::count(row.begin(), row.end(), ',') == 4);
   CHECK(row.rfind("12,0.5,1,", 0) == 0);

   const auto j = nlohmann::json::parse(to_json(r));
   CHECK(j["message_size_bytes"] == 12);
   CHECK(j["mse_standard"].get<double>() == doctest::Approx(1.0));
   CHECK(j.contains("histograms"));
   CHECK_FALSE(nlohmann::json::parse(to_json(r, false)).contains("histograms"));
   }
