/*
* Acceptance checks. Each criterion prints one PASS/FAIL line; the exit
* status is nonzero if any selected criterion fails.
*
*   acceptance             run everything
*   acceptance NAME...     run the named criteria
*   acceptance --list      print the criterion names
*/

#include "blowfish_vectors.hpp"
#include "test_util.hpp"

#include <vcstego/blowfish.hpp>
#include <vcstego/codec.hpp>
#include <vcstego/errors.hpp>
#include <vcstego/metrics.hpp>
#include <vcstego/pipeline.hpp>
#include <vcstego/steganalysis.hpp>
#include <vcstego/stego.hpp>
#include <vcstego/vcs.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace vcstego;

namespace {

struct Outcome
   {
   bool pass = false;
   std::string detail;
   };

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
   {
   return std::chrono::duration<double>(Clock::now() - t0).count();
   }

std::string fmt(const char* f, auto... args)
   {
   char buf[512];
   std::snprintf(buf, sizeof(buf), f, args...);
   return buf;
   }

double chi2_sf(double stat, double dof)
   {
   return boost::math::gamma_q(dof / 2.0, stat / 2.0);
   }

PipelineConfig config(std::uint64_t seed)
   {
   PipelineConfig cfg;
   cfg.passphrase = test::bytes_of("acceptance-key");
   cfg.seed = seed;
   return cfg;
   }

const RgbImage& cover_a()
   {
   static const RgbImage c = test::quality_cover("astronaut");
   return c;
   }

const RgbImage& cover_b()
   {
   static const RgbImage c = test::quality_cover("ihc");
   return c;
   }

constexpr std::size_t kQualityMessageBytes = 11958;

Outcome blowfish_vectors()
   {
   const auto t0 = Clock::now();
   std::size_t ok = 0, total = 0;
   bool zero_ok = false;
   for(const auto& v : test::kBlowfishVectors)
      {
      ++total;
      const KeySchedule ks(KeyMaterial(test::from_hex(v.key_hex)));
      if(ks.encrypt(Block::from_u64(v.plaintext)).to_u64() == v.ciphertext)
         ++ok;
      }
   const KeySchedule zero(KeyMaterial(std::vector<std::uint8_t>(8, 0)));
   zero_ok = zero.encrypt(std::uint64_t{0}) == 0x4EF997456198DD78ULL;
   const double t = seconds_since(t0);
   return {ok == total && zero_ok && t < 1.0,
           fmt("%zu/%zu vectors byte-exact, zero-key vector %s, %.3f s (limit 1 s)", ok, total,
               zero_ok ? "ok" : "WRONG", t)};
   }

Outcome round_trip()
   {
   const auto t0 = Clock::now();
   Xoshiro256 rng(0xACCE55);
   std::size_t ok = 0;
   const std::size_t runs = 1000;
   std::size_t max_len = 0;
   for(std::size_t i = 0; i != runs; ++i)
      {
      const std::size_t len = 1 + rng.uniform(10240);
      max_len = std::max(max_len, len);
      const auto m = test::random_bytes(rng, len);
      const PipelineConfig cfg = config(rng.next());
      const EncryptionResult r = ebvcs(m, cover_a(), cover_b(), cfg);
      if(dbvcs(r.steg1, r.steg2, cfg) == m)
         ++ok;
      }
   const double t = seconds_since(t0);
   return {ok == runs && t < 120.0,
           fmt("%zu/%zu messages (1..%zu bytes) recovered exactly on 512x512 covers, %.1f s (limit 120 s)",
               ok, runs, max_len, t)};
   }

Outcome vcs_share_uniformity()
   {
   constexpr std::size_t side = 32;
   constexpr std::size_t seeds = 1000;
   constexpr std::size_t blocks = side * side;
   Xoshiro256 rng(0x5EC7E7);
   const BinaryImage secret = test::random_binary(rng, side, side);

   std::array<int, 16> index{};
   index.fill(-1);
   for(std::size_t k = 0; k != kSharePatterns.size(); ++k)
      index[kSharePatterns[k]] = int(k);

   // counts[share][position][pattern]
   std::vector<std::array<std::uint32_t, 6>> counts(2 * blocks);
   std::size_t bad_pattern = 0;
   for(std::uint64_t seed = 0; seed != seeds; ++seed)
      {
      const SharePair p = split(secret, seed);
      for(std::size_t s = 0; s != 2; ++s)
         {
         const BinaryImage& sh = s ? p.sh2 : p.sh1;
         for(std::size_t by = 0; by != side; ++by)
            for(std::size_t bx = 0; bx != side; ++bx)
               {
               const int k = index[block_pattern(sh, bx, by)];
               if(k < 0)
                  ++bad_pattern;
               else
                  ++counts[s * blocks + by * side + bx][std::size_t(k)];
               }
         }
      }

   auto gof = [](const std::array<double, 6>& obs) {
      double n = 0;
      for(double o : obs)
         n += o;
      const double e = n / 6.0;
      double stat = 0;
      for(double o : obs)
         stat += (o - e) * (o - e) / e;
      return chi2_sf(stat, 5.0);
   };

   double min_pooled = 1.0, min_homog = 1.0, min_position = 1.0;
   for(std::size_t s = 0; s != 2; ++s)
      {
      std::array<std::array<double, 6>, 2> pooled{}; // [secret value][pattern]
      for(std::size_t pos = 0; pos != blocks; ++pos)
         {
         std::array<double, 6> obs{};
         for(std::size_t k = 0; k != 6; ++k)
            {
            obs[k] = counts[s * blocks + pos][k];
            pooled[secret.bits()[pos]][k] += obs[k];
            }
         min_position = std::min(min_position, gof(obs));
         }
      min_pooled = std::min({min_pooled, gof(pooled[0]), gof(pooled[1])});

      // white vs black positions: 2x6 homogeneity
      double row[2] = {0, 0}, col[6] = {}, n = 0;
      for(std::size_t v = 0; v != 2; ++v)
         for(std::size_t k = 0; k != 6; ++k)
            {
            row[v] += pooled[v][k];
            col[k] += pooled[v][k];
            n += pooled[v][k];
            }
      double stat = 0;
      for(std::size_t v = 0; v != 2; ++v)
         for(std::size_t k = 0; k != 6; ++k)
            {
            const double e = row[v] * col[k] / n;
            stat += (pooled[v][k] - e) * (pooled[v][k] - e) / e;
            }
      min_homog = std::min(min_homog, chi2_sf(stat, 5.0));
      }

   // Gate: uniformity of each share over white positions and over black
   // positions, plus every block position at family-wise 0.01. The direct
   // white-vs-black homogeneity p is reported but not gated.
   const double bonferroni = 0.01 / double(2 * blocks);
   const bool pass = bad_pattern == 0 && min_pooled > 0.01 && min_position > bonferroni;
   return {pass, fmt("%zu seeds, 32x32 secret: uniformity over white / black positions min p=%.3f (need > 0.01), "
                     "per-position min p=%.2e (need > %.2e), off-set patterns %zu; "
                     "white-vs-black homogeneity min p=%.3f (informational)",
                     seeds, min_pooled, min_position, bonferroni, bad_pattern, min_homog)};
   }

struct QualityRun
   {
   MetricsReport m1, m2;
   std::size_t embedded_bits = 0;
   };

const QualityRun& quality_run()
   {
   static const QualityRun run = [] {
      const auto m = sweep_message(kQualityMessageBytes, 1);
      const EncryptionResult r = ebvcs(m, cover_a(), cover_b(), config(1));
      QualityRun q;
      q.m1 = measure(cover_a(), r.steg1, m.size());
      q.m2 = measure(cover_b(), r.steg2, m.size());
      q.embedded_bits = required_payload_bits(m.size());
      return q;
   }();
   return run;
   }

Outcome quality_band()
   {
   const auto t0 = Clock::now();
   const QualityRun& q = quality_run();
   const double t = seconds_since(t0);
   const double psnr_min = std::min(*q.m1.psnr_db, *q.m2.psnr_db);
   const double mse_max = std::max(q.m1.mse_standard, q.m2.mse_standard);
   const bool pass = psnr_min >= 55.0 && mse_max <= 0.15 && t < 60.0;
   return {pass, fmt("%zu-byte message, %zu bits per cover: PSNR %.2f / %.2f dB (need >= 55), "
                     "standard MSE %.4f / %.4f (need <= 0.15), half-N MSE %.4f / %.4f, %.2f s",
                     kQualityMessageBytes, q.embedded_bits, *q.m1.psnr_db, *q.m2.psnr_db,
                     q.m1.mse_standard, q.m2.mse_standard, q.m1.mse_paper, q.m2.mse_paper, t)};
   }

Outcome quality_monotonic()
   {
   const auto t0 = Clock::now();
   const std::vector<std::size_t> sizes = {2048, 4096, 6144, 8192, 10240, 12288};
   const auto recs = sweep(sizes, cover_a(), cover_b(), config(7), false);
   bool pass = true;
   std::ostringstream psnrs;
   for(std::size_t i = 0; i != recs.size(); ++i)
      {
      psnrs << (i ? ", " : "") << fmt("%.2f/%.2f", *recs[i].metrics1.psnr_db, *recs[i].metrics2.psnr_db);
      if(i == 0)
         continue;
      pass = pass && *recs[i].metrics1.psnr_db <= *recs[i - 1].metrics1.psnr_db &&
             *recs[i].metrics2.psnr_db <= *recs[i - 1].metrics2.psnr_db &&
             recs[i].metrics1.mse_standard >= recs[i - 1].metrics1.mse_standard &&
             recs[i].metrics2.mse_standard >= recs[i - 1].metrics2.mse_standard &&
             recs[i].metrics1.mse_paper >= recs[i - 1].metrics1.mse_paper &&
             recs[i].metrics2.mse_paper >= recs[i - 1].metrics2.mse_paper;
      }
   const double t = seconds_since(t0);
   pass = pass && t < 60.0;
   return {pass, "PSNR over 2..12 KB: " + psnrs.str() + fmt(" dB; MSE non-decreasing: %s, %.2f s",
                                                          pass ? "yes" : "no", t)};
   }

Outcome histogram_max_delta()
   {
   const QualityRun& q = quality_run();
   const auto d = std::max(q.m1.distance.max_bin_delta, q.m2.distance.max_bin_delta);
   return {d <= q.embedded_bits,
           fmt("max per-bin delta %llu / %llu vs %zu embedded bits", (unsigned long long)q.m1.distance.max_bin_delta,
               (unsigned long long)q.m2.distance.max_bin_delta, q.embedded_bits)};
   }

Outcome histogram_l1()
   {
   const QualityRun& q = quality_run();
   const double wh1 = double(cover_a().pixel_count());
   const double wh2 = double(cover_b().pixel_count());
   const double r1 = double(q.m1.distance.l1) / wh1;
   const double r2 = double(q.m2.distance.l1) / wh2;
   return {std::max(r1, r2) <= 0.02,
           fmt("L1/(w*h) %.4f / %.4f at %zu bytes (need <= 0.02)", r1, r2, kQualityMessageBytes)};
   }

std::vector<RgbImage> load_covers()
   {
   std::vector<RgbImage> out;
   for(const auto& p : test::cover_paths())
      out.push_back(read_rgb(p));
   return out;
   }

Outcome steganalysis_separation()
   {
   const auto covers = load_covers();
   double clean = 0, control = 0;
   for(std::size_t i = 0; i != covers.size(); ++i)
      {
      clean += analyze(covers[i]).fused;
      control += analyze(test::full_lsb_embed(covers[i], 1000 + i)).fused;
      }
   clean /= double(covers.size());
   control /= double(covers.size());
   const bool pass = covers.size() >= 20 && control - clean >= 0.3;
   return {pass, fmt("%zu covers: mean fused pristine %.3f, full-capacity control %.3f, gap %.3f (need >= 0.3)",
                     covers.size(), clean, control, control - clean)};
   }

Outcome steganalysis_low_rate()
   {
   const auto covers = load_covers();
   const std::size_t limit = capacity(covers.front()) / 10;
   std::size_t bytes = 1;
   while(required_payload_bits(bytes + 1) <= limit)
      ++bytes;

   std::size_t below = 0;
   double worst = 0;
   for(std::size_t i = 0; i != covers.size(); ++i)
      {
      const auto m = sweep_message(bytes, i);
      const EncryptionResult r = ebvcs(m, covers[i], covers[(i + 1) % covers.size()], config(i));
      const double f = analyze(r.steg1).fused;
      worst = std::max(worst, f);
      if(f < kDefaultFusionThreshold)
         ++below;
      }
   const double frac = double(below) / double(covers.size());
   return {covers.size() >= 20 && frac >= 0.8,
           fmt("%zu-byte messages (%zu bits, %.1f%% of capacity): %zu/%zu covers below 0.2 (%.0f%%, need >= 80%%), "
               "worst fused %.3f",
               bytes, required_payload_bits(bytes), 100.0 * double(required_payload_bits(bytes)) / double(capacity(covers.front())),
               below, covers.size(), 100.0 * frac, worst)};
   }

Outcome stego_bijectivity()
   {
   Xoshiro256 rng(0xB1EC7);
   const std::size_t cases = 10000;
   std::size_t ok = 0;
   for(std::size_t i = 0; i != cases; ++i)
      {
      const std::size_t w = 8 + rng.uniform(57), h = 8 + rng.uniform(57);
      const RgbImage cover = test::random_rgb(rng, w, h);
      const std::size_t max_side = 2;
      std::size_t sw = 2 * (1 + rng.uniform(16)), sh = 2 * (1 + rng.uniform(16));
      while(share_payload_bits(sw, sh) > capacity(cover) && sw > max_side)
         sw -= 2;
      while(share_payload_bits(sw, sh) > capacity(cover) && sh > max_side)
         sh -= 2;
      const BinaryImage share = test::random_binary(rng, sw, sh);
      const StegoPayload p = StegoPayload::from_share(share);
      const StegoPayload q = extract(embed(cover, p));
      if(q == p && q.to_share() == share)
         ++ok;
      }
   return {ok == cases, fmt("extract(embed(p)) == p for %zu/%zu random payloads and covers", ok, cases)};
   }

Outcome codec_bijectivity()
   {
   Xoshiro256 rng(0xC0DEC);
   const std::size_t cases = 10000;
   std::size_t ok = 0;
   for(std::size_t i = 0; i != cases; ++i)
      {
      const std::size_t len = (i % 10 == 0) ? 1 + rng.uniform(20000) : 1 + rng.uniform(300);
      const auto c = test::random_bytes(rng, len);
      if(image_to_ciphertext(ciphertext_to_image(c)) == c)
         ++ok;
      }
   return {ok == cases, fmt("image_to_ciphertext(ciphertext_to_image(c)) == c for %zu/%zu random inputs", ok, cases)};
   }

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria()
   {
   static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"blowfish_vectors", blowfish_vectors},
      {"round_trip", round_trip},
      {"vcs_share_uniformity", vcs_share_uniformity},
      {"quality_band", quality_band},
      {"quality_monotonic", quality_monotonic},
      {"histogram_max_delta", histogram_max_delta},
      {"histogram_l1", histogram_l1},
      {"steganalysis_separation", steganalysis_separation},
      {"steganalysis_low_rate", steganalysis_low_rate},
      {"stego_bijectivity", stego_bijectivity},
      {"codec_bijectivity", codec_bijectivity},
   };
   return list;
   }

}

int main(int argc, char** argv)
   {
   std::vector<std::string> wanted(argv + 1, argv + argc);
   if(wanted.size() == 1 && wanted[0] == "--list")
      {
      for(const auto& [name, fn] : criteria())
         std::cout << name << "\n";
      return 0;
      }

   int failures = 0;
   std::size_t ran = 0;
   for(const auto& [name, fn] : criteria())
      {
      if(!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end())
         continue;
      ++ran;
      Outcome o;
      try
         {
         o = fn();
         }
      catch(const std::exception& e)
         {
         o = {false, std::string("exception: ") + e.what()};
         }
      std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
      if(!o.pass)
         ++failures;
      }
   if(ran == 0)
      {
      std::cerr << "no such criterion\n";
      return 2;
      }
   return failures ? 1 : 0;
   }
