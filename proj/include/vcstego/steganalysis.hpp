/*
* Steganalysis: bit-plane visual attack and statistical LSB detectors
*
* The detectors are reimplementations of the standard published methods
* (Westfeld-Pfitzmann chi-square attack, Fridrich RS analysis,
* Dumitrescu-Wu-Wang sample pair analysis) and the mean fusion used by
* StegExpose. They are not bit-compatible with that tool.
*/

#ifndef VCSTEGO_STEGANALYSIS_HPP
#define VCSTEGO_STEGANALYSIS_HPP

#include <vcstego/image.hpp>

#include <optional>
#include <string>
#include <vector>

namespace vcstego {

enum class PlaneChannel { red, green, blue, luma };

const char* plane_channel_name(PlaneChannel c);

/// Bit `plane` (0 = LSB) of each pixel's selected channel. Throws PlaneRangeError.
BinaryImage bitplane(const RgbImage& img, int plane, PlaneChannel channel);

/// Pearson correlation of horizontally adjacent pixels; 0 for constant planes.
double adjacent_bit_correlation(const BinaryImage& plane);

inline constexpr std::size_t kDefaultChiWindow = 4096;
inline constexpr std::size_t kMinChiWindow = 512;

/**
* Chi-square attack over the sample stream in embedding order. The
* statistic is evaluated on growing prefixes of 1, 2, 3, ... windows and
* the score is the mean of the resulting p-values (probability of
* embedding). Pairs of values with expected count below 5 are skipped.
* Images smaller than one window are analysed as a single window.
* Throws InvalidArgumentError for window < 512 and ImageTooSmallError for
* images with fewer than 512 samples.
*/
double chi_square_attack(const RgbImage& img, std::size_t window = kDefaultChiWindow);

/**
* RS analysis with mask [0,1,1,0] and its negation over groups of four
* horizontally adjacent samples of one channel. Per-channel estimates are
* averaged over channels that are not flat. Result clamped to [0,1].
* Throws ImageTooSmallError below 64x64 and DegenerateImageError when
* every channel has a single discrimination value.
*/
double rs_analysis(const RgbImage& img);

/**
* Sample pair analysis over horizontally adjacent samples of the same
* channel; smaller root of the pair-count quadratic, clamped to [0,1].
* Throws ImageTooSmallError below 64x64 and DegenerateImageError when all
* adjacent samples are equal.
*/
double sample_pairs(const RgbImage& img);

inline constexpr double kDefaultFusionThreshold = 0.2;

enum class Verdict { clean, suspect };

struct DetectorReport
   {
   std::optional<double> chi_square_score;
   std::optional<double> rs_rate;
   std::optional<double> sp_rate;
   double fused = 0;
   double threshold = kDefaultFusionThreshold;
   Verdict verdict = Verdict::clean;
   };

/**
* Arithmetic mean of the available scores (each clamped to [0,1]);
* suspect iff fused > threshold. Throws NoDetectorsError when none is set.
*/
DetectorReport fuse(std::optional<double> chi_square_score,
                    std::optional<double> rs_rate,
                    std::optional<double> sp_rate,
                    double threshold = kDefaultFusionThreshold);

/// Same fusion over an arbitrary list of scores.
double fuse_scores(const std::vector<double>& scores);

/// Runs all detectors; ones that cannot analyse the image are left empty.
DetectorReport analyze(const RgbImage& img,
                       double threshold = kDefaultFusionThreshold,
                       std::size_t chi_window = kDefaultChiWindow);

std::string to_json(const DetectorReport& r);

}

#endif
