/*
* Steganalysis: bit-plane visual attack and statistical LSB detectors
*/

#include <vcstego/errors.hpp>
#include <vcstego/steganalysis.hpp>

#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace vcstego {

const char* plane_channel_name(PlaneChannel c)
   {
   switch(c)
      {
      case PlaneChannel::red: return "red";
      case PlaneChannel::green: return "green";
      case PlaneChannel::blue: return "blue";
      case PlaneChannel::luma: return "luma";
      }
   return "?";
   }

BinaryImage bitplane(const RgbImage& img, int plane, PlaneChannel channel)
   {
   if(plane < 0 || plane > 7)
      throw PlaneRangeError("bit plane must be in [0, 7], got " + std::to_string(plane));

   std::vector<std::uint8_t> bits(img.pixel_count());
   const auto s = img.samples();
   for(std::size_t i = 0; i != bits.size(); ++i)
      {
      const std::uint8_t v = channel == PlaneChannel::luma
                                ? luminance(s[3 * i], s[3 * i + 1], s[3 * i + 2])
                                : s[3 * i + static_cast<std::size_t>(channel)];
      bits[i] = (v >> plane) & 1;
      }
   return BinaryImage(img.width(), img.height(), std::move(bits));
   }

double adjacent_bit_correlation(const BinaryImage& plane)
   {
   double n = 0, sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
   for(std::size_t y = 0; y != plane.height(); ++y)
      {
      for(std::size_t x = 0; x + 1 < plane.width(); ++x)
         {
         const double a = plane.at(x, y);
         const double b = plane.at(x + 1, y);
         n += 1;
         sa += a;
         sb += b;
         saa += a * a;
         sbb += b * b;
         sab += a * b;
         }
      }
   if(n == 0)
      return 0.0;
   const double cov = sab / n - (sa / n) * (sb / n);
   const double va = saa / n - (sa / n) * (sa / n);
   const double vb = sbb / n - (sb / n) * (sb / n);
   if(va <= 0 || vb <= 0)
      return 0.0;
   return cov / std::sqrt(va * vb);
   }

namespace {

constexpr double kMinExpectedCount = 5.0;
constexpr std::size_t kMinAnalysisSide = 64;

void require_min_size(const RgbImage& img, const char* detector)
   {
   if(img.width() < kMinAnalysisSide || img.height() < kMinAnalysisSide)
      throw ImageTooSmallError(std::string(detector) + " needs at least 64x64 pixels, got " +
                               std::to_string(img.width()) + "x" + std::to_string(img.height()));
   }

/// p-value of the pairs-of-values statistic for one histogram, or nothing
/// when fewer than two pairs have enough mass.
std::optional<double> pov_p_value(const std::array<std::uint64_t, 256>& h)
   {
   double stat = 0;
   int categories = 0;
   for(std::size_t k = 0; k != 128; ++k)
      {
      const double expected = (double(h[2 * k]) + double(h[2 * k + 1])) / 2.0;
      if(expected < kMinExpectedCount)
         continue;
      const double d = double(h[2 * k]) - expected;
      stat += d * d / expected;
      ++categories;
      }
   if(categories < 2)
      return std::nullopt;
   const double dof = categories - 1;
   return boost::math::gamma_q(dof / 2.0, stat / 2.0);
   }

}

double chi_square_attack(const RgbImage& img, std::size_t window)
   {
   if(window < kMinChiWindow)
      throw InvalidArgumentError("chi-square window must be at least 512 samples");
   const auto s = img.samples();
   if(s.size() < kMinChiWindow)
      throw ImageTooSmallError("chi-square attack needs at least 512 samples, got " +
                               std::to_string(s.size()));

   std::array<std::uint64_t, 256> h{};
   double sum = 0;
   std::size_t evaluated = 0;
   std::size_t pos = 0;
   while(pos < s.size())
      {
      const std::size_t end = std::min(s.size(), pos + window);
      for(; pos != end; ++pos)
         ++h[s[pos]];
      if(auto p = pov_p_value(h))
         {
         sum += *p;
         ++evaluated;
         }
      }
   return evaluated ? sum / double(evaluated) : 0.0;
   }

namespace {

using Group = std::array<int, 4>;

int discrimination(const Group& g)
   {
   return std::abs(g[1] - g[0]) + std::abs(g[2] - g[1]) + std::abs(g[3] - g[2]);
   }

int flip_pos(int v) { return v ^ 1; }
int flip_neg(int v) { return ((v + 1) ^ 1) - 1; }

struct RsCounts
   {
   double regular = 0;
   double singular = 0;
   };

/// Mask [0,1,1,0] (negative = false) or [0,-1,-1,0] (negative = true).
RsCounts rs_counts(const std::vector<Group>& groups, bool negative)
   {
   std::size_t r = 0, s = 0;
   for(const Group& g : groups)
      {
      Group flipped = g;
      flipped[1] = negative ? flip_neg(g[1]) : flip_pos(g[1]);
      flipped[2] = negative ? flip_neg(g[2]) : flip_pos(g[2]);
      const int before = discrimination(g);
      const int after = discrimination(flipped);
      if(after > before)
         ++r;
      else if(after < before)
         ++s;
      }
   const double n = double(groups.size());
   return RsCounts{double(r) / n, double(s) / n};
   }

std::optional<double> rs_channel_estimate(const RgbImage& img, std::size_t channel)
   {
   std::vector<Group> groups;
   groups.reserve(img.height() * (img.width() / 4));
   const auto s = img.samples();
   for(std::size_t y = 0; y != img.height(); ++y)
      {
      for(std::size_t x = 0; x + 4 <= img.width(); x += 4)
         {
         Group g;
         for(std::size_t i = 0; i != 4; ++i)
            g[i] = s[3 * (y * img.width() + x + i) + channel];
         groups.push_back(g);
         }
      }

   const int first = discrimination(groups.front());
   if(std::all_of(groups.begin(), groups.end(),
                  [first](const Group& g) { return discrimination(g) == first; }))
      return std::nullopt;

   std::vector<Group> inverted = groups;
   for(Group& g : inverted)
      for(int& v : g)
         v ^= 1;

   const RsCounts pm = rs_counts(groups, false);
   const RsCounts nm = rs_counts(groups, true);
   const RsCounts pm_inv = rs_counts(inverted, false);
   const RsCounts nm_inv = rs_counts(inverted, true);

   const double d0 = pm.regular - pm.singular;
   const double d1 = pm_inv.regular - pm_inv.singular;
   const double dn0 = nm.regular - nm.singular;
   const double dn1 = nm_inv.regular - nm_inv.singular;

   const double a = 2.0 * (d1 + d0);
   const double b = dn0 - dn1 - d1 - 3.0 * d0;
   const double c = d0 - dn0;

   // Near full embedding both measurement points approach the curve
   // crossing and the root runs off to infinity (rate -> 1). Complex roots
   // are kept complex so that limit is preserved through z / (z - 1/2).
   std::complex<double> z;
   if(std::abs(a) < 1e-12)
      {
      if(std::abs(b) < 1e-12)
         return 1.0;
      z = -c / b;
      }
   else
      {
      const std::complex<double> root = std::sqrt(std::complex<double>(b * b - 4.0 * a * c));
      const std::complex<double> z1 = (-b + root) / (2.0 * a);
      const std::complex<double> z2 = (-b - root) / (2.0 * a);
      z = std::abs(z1) <= std::abs(z2) ? z1 : z2;
      }
   const std::complex<double> denom = z - 0.5;
   if(std::abs(denom) < 1e-12)
      return 1.0;
   return (z / denom).real();
   }

}

double rs_analysis(const RgbImage& img)
   {
   require_min_size(img, "RS analysis");
   double sum = 0;
   int used = 0;
   for(std::size_t c = 0; c != 3; ++c)
      {
      if(auto e = rs_channel_estimate(img, c))
         {
         sum += *e;
         ++used;
         }
      }
   if(used == 0)
      throw DegenerateImageError("RS analysis: every channel is flat, groups cannot be discriminated");
   return std::clamp(sum / used, 0.0, 1.0);
   }

double sample_pairs(const RgbImage& img)
   {
   require_min_size(img, "sample pair analysis");

   // X: v even and u < v, or v odd and u > v;  Y: the opposite order
   // Z: u == v;  W: u, v differ only in the LSB
   std::uint64_t x_count = 0, y_count = 0, z_count = 0, w_count = 0, pairs = 0;
   const auto s = img.samples();
   for(std::size_t y = 0; y != img.height(); ++y)
      {
      for(std::size_t x = 0; x + 1 < img.width(); ++x)
         {
         for(std::size_t c = 0; c != 3; ++c)
            {
            const int u = s[3 * (y * img.width() + x) + c];
            const int v = s[3 * (y * img.width() + x + 1) + c];
            ++pairs;
            const bool v_even = (v & 1) == 0;
            if((v_even && u < v) || (!v_even && u > v))
               ++x_count;
            else if((v_even && u > v) || (!v_even && u < v))
               ++y_count;
            else
               ++z_count;
            if((u >> 1) == (v >> 1) && u != v)
               ++w_count;
            }
         }
      }
   if(x_count + y_count == 0)
      throw DegenerateImageError("sample pair analysis: all adjacent samples are equal");

   const double n = double(pairs);
   const double a = 0.5 * double(w_count + z_count) / n;
   const double b = (2.0 * double(x_count) - n) / n;
   const double c = (double(y_count) - double(x_count)) / n;

   double p;
   if(a == 0)
      p = -c / b;
   else
      {
      const double disc = b * b - 4.0 * a * c;
      p = disc < 0 ? -b / (2.0 * a) : (-b - std::sqrt(disc)) / (2.0 * a);
      }
   return std::clamp(p, 0.0, 1.0);
   }

double fuse_scores(const std::vector<double>& scores)
   {
   if(scores.empty())
      throw NoDetectorsError("no detector output to fuse");
   double sum = 0;
   for(double s : scores)
      sum += std::clamp(s, 0.0, 1.0);
   return sum / double(scores.size());
   }

DetectorReport fuse(std::optional<double> chi_square_score,
                    std::optional<double> rs_rate,
                    std::optional<double> sp_rate,
                    double threshold)
   {
   DetectorReport r;
   std::vector<double> scores;
   auto take = [&scores](std::optional<double>& v) {
      if(v)
         {
         v = std::clamp(*v, 0.0, 1.0);
         scores.push_back(*v);
         }
   };
   take(chi_square_score);
   take(rs_rate);
   take(sp_rate);

   r.chi_square_score = chi_square_score;
   r.rs_rate = rs_rate;
   r.sp_rate = sp_rate;
   r.fused = fuse_scores(scores);
   r.threshold = threshold;
   // compare sums so that a mean landing on the threshold is not pushed
   // over it by rounding in the division
   double sum = 0;
   for(double v : scores)
      sum += v;
   r.verdict = sum > threshold * double(scores.size()) ? Verdict::suspect : Verdict::clean;
   return r;
   }

DetectorReport analyze(const RgbImage& img, double threshold, std::size_t chi_window)
   {
   auto attempt = [&img](auto fn) -> std::optional<double> {
      try
         {
         return fn(img);
         }
      catch(const ImageTooSmallError&)
         {
         return std::nullopt;
         }
      catch(const DegenerateImageError&)
         {
         return std::nullopt;
         }
   };
   return fuse(attempt([chi_window](const RgbImage& i) { return chi_square_attack(i, chi_window); }),
               attempt(rs_analysis),
               attempt(sample_pairs),
               threshold);
   }

std::string to_json(const DetectorReport& r)
   {
   nlohmann::ordered_json j;
   auto put = [&j](const char* key, const std::optional<double>& v) {
      if(v)
         j[key] = *v;
      else
         j[key] = nullptr;
   };
   put("chi_square_score", r.chi_square_score);
   put("rs_rate", r.rs_rate);
   put("sp_rate", r.sp_rate);
   j["fused"] = r.fused;
   j["threshold"] = r.threshold;
   j["verdict"] = r.verdict == Verdict::suspect ? "suspect" : "clean";
   j["detectors"] = {
      {"chi_square", "reimplementation (Westfeld-Pfitzmann pairs of values, growing prefixes)"},
      {"rs", "reimplementation (Fridrich RS analysis, mask [0,1,1,0])"},
      {"sample_pairs", "reimplementation (Dumitrescu-Wu-Wang sample pair analysis)"},
      {"fusion", "arithmetic mean; suspect iff fused > threshold"},
   };
   return j.dump(2);
   }

}
