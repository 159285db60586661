/*
* Image quality metrics: MSE, PSNR and per-channel histograms
*/

#include <vcstego/errors.hpp>
#include <vcstego/metrics.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace vcstego {

double squared_error(const RgbImage& x, const RgbImage& y)
   {
   if(x.width() != y.width() || x.height() != y.height())
      throw DimensionMismatchError("images differ in size: " + std::to_string(x.width()) + "x" +
                                   std::to_string(x.height()) + " vs " +
                                   std::to_string(y.width()) + "x" + std::to_string(y.height()));
   const auto a = x.samples();
   const auto b = y.samples();
   std::uint64_t sum = 0;
   for(std::size_t i = 0; i != a.size(); ++i)
      {
      const int d = int{a[i]} - int{b[i]};
      sum += static_cast<std::uint64_t>(d * d);
      }
   return static_cast<double>(sum);
   }

double mse(const RgbImage& x, const RgbImage& y, MseVariant variant)
   {
   const double se = squared_error(x, y);
   if(x.empty())
      return 0.0;
   const double n = static_cast<double>(x.sample_count());
   return variant == MseVariant::halved ? se / (2.0 * n) : se / n;
   }

double psnr_from_mse(double mse_value, int bit_depth)
   {
   const double peak = std::ldexp(1.0, bit_depth) - 1.0;
   return 20.0 * std::log10(peak / std::sqrt(mse_value));
   }

double psnr(const RgbImage& x, const RgbImage& y, int bit_depth, MseVariant variant)
   {
   const double m = mse(x, y, variant);
   if(m == 0.0)
      throw IdenticalImagesError("images are identical; PSNR is unbounded");
   return psnr_from_mse(m, bit_depth);
   }

Histogram histogram(const RgbImage& img)
   {
   Histogram h{};
   const auto s = img.samples();
   for(std::size_t i = 0; i != s.size(); ++i)
      ++h[i % 3][s[i]];
   return h;
   }

HistogramDistance histogram_distance(const Histogram& h1, const Histogram& h2)
   {
   HistogramDistance d;
   for(std::size_t c = 0; c != 3; ++c)
      {
      for(std::size_t b = 0; b != 256; ++b)
         {
         const std::uint64_t delta = h1[c][b] > h2[c][b] ? h1[c][b] - h2[c][b] : h2[c][b] - h1[c][b];
         d.l1 += delta;
         d.max_bin_delta = std::max(d.max_bin_delta, delta);
         }
      }
   return d;
   }

MetricsReport measure(const RgbImage& reference, const RgbImage& test,
                      std::size_t message_size_bytes)
   {
   MetricsReport r;
   r.message_size_bytes = message_size_bytes;
   r.mse_paper = mse(reference, test, MseVariant::halved);
   r.mse_standard = mse(reference, test, MseVariant::standard);
   if(r.mse_standard > 0)
      r.psnr_db = psnr_from_mse(r.mse_standard);
   r.reference_histogram = histogram(reference);
   r.test_histogram = histogram(test);
   r.distance = histogram_distance(r.reference_histogram, r.test_histogram);
   return r;
   }

namespace {

std::string format_double(double v)
   {
   char buf[32];
   std::snprintf(buf, sizeof(buf), "%.9g", v);
   return buf;
   }

}

std::string metrics_csv_header()
   {
   return "message_size_bytes,mse_paper,mse_standard,psnr_db,max_bin_delta";
   }

std::string to_csv_row(const MetricsReport& r)
   {
   return std::to_string(r.message_size_bytes) + "," + format_double(r.mse_paper) + "," +
          format_double(r.mse_standard) + "," +
          (r.psnr_db ? format_double(*r.psnr_db) : std::string("inf")) + "," +
          std::to_string(r.distance.max_bin_delta);
   }

std::string to_json(const MetricsReport& r, bool include_histograms)
   {
   nlohmann::ordered_json j;
   j["message_size_bytes"] = r.message_size_bytes;
   j["mse_paper"] = r.mse_paper;
   j["mse_standard"] = r.mse_standard;
   if(r.psnr_db)
      j["psnr_db"] = *r.psnr_db;
   else
      j["psnr_db"] = "inf";
   j["psnr_mse_variant"] = "standard";
   j["note"] = "mse_paper divides the squared error by 2N, mse_standard by N (N = sample count); "
               "PSNR uses mse_standard";
   j["max_bin_delta"] = r.distance.max_bin_delta;
   j["histogram_l1"] = r.distance.l1;
   if(include_histograms)
      {
      static const char* names[] = {"red", "green", "blue"};
      for(std::size_t c = 0; c != 3; ++c)
         {
         j["histograms"]["reference"][names[c]] = r.reference_histogram[c];
         j["histograms"]["test"][names[c]] = r.test_histogram[c];
         }
      }
   return j.dump(2);
   }

}
