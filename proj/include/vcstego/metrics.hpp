/*
* Image quality metrics: MSE, PSNR and per-channel histograms
*/

#ifndef VCSTEGO_METRICS_HPP
#define VCSTEGO_METRICS_HPP

#include <vcstego/image.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace vcstego {

/**
* halved:   ||X - Y||^2 / (2 N)   (reported as mse_paper)
* standard: ||X - Y||^2 / N
* N is the number of samples (3 * width * height).
*/
enum class MseVariant { halved, standard };

/// Throws DimensionMismatchError.
double squared_error(const RgbImage& x, const RgbImage& y);
double mse(const RgbImage& x, const RgbImage& y, MseVariant variant = MseVariant::standard);

/// 20 log10((2^B - 1) / sqrt(mse))
double psnr_from_mse(double mse, int bit_depth = 8);

/// Throws IdenticalImagesError when the images are equal (MSE = 0).
double psnr(const RgbImage& x, const RgbImage& y, int bit_depth = 8,
            MseVariant variant = MseVariant::standard);

using ChannelHistogram = std::array<std::uint64_t, 256>;
using Histogram = std::array<ChannelHistogram, 3>;

Histogram histogram(const RgbImage& img);

struct HistogramDistance
   {
   std::uint64_t max_bin_delta = 0;
   std::uint64_t l1 = 0; ///< summed over all channels and bins
   };

HistogramDistance histogram_distance(const Histogram& h1, const Histogram& h2);

struct MetricsReport
   {
   std::size_t message_size_bytes = 0;
   double mse_paper = 0;
   double mse_standard = 0;
   std::optional<double> psnr_db; ///< empty when the images are identical
   Histogram reference_histogram{};
   Histogram test_histogram{};
   HistogramDistance distance;
   };

/// Both MSE variants, standard-variant PSNR and histograms.
MetricsReport measure(const RgbImage& reference, const RgbImage& test,
                      std::size_t message_size_bytes = 0);

/// message_size_bytes,mse_paper,mse_standard,psnr_db,max_bin_delta
std::string metrics_csv_header();
std::string to_csv_row(const MetricsReport& r);
std::string to_json(const MetricsReport& r, bool include_histograms = true);

}

#endif
