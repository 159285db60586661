/*
* End-to-end encryption / decryption and the message-size sweep
*/

#include <vcstego/codec.hpp>
#include <vcstego/errors.hpp>
#include <vcstego/pipeline.hpp>
#include <vcstego/rng.hpp>
#include <vcstego/stego.hpp>

#include <algorithm>
#include <string>

namespace vcstego {

std::size_t required_payload_bits(std::size_t message_bytes, CipherMode mode)
   {
   const std::size_t ciphertext = padded_length(message_bytes) + (mode == CipherMode::cbc ? 8 : 0);
   const ImageSize encimg = encimg_size(8 * (kFrameHeaderBytes + ciphertext));
   return share_payload_bits(encimg.width * kExpansion, encimg.height * kExpansion);
   }

EncryptionResult ebvcs(std::span<const std::uint8_t> message,
                       const RgbImage& cover1, const RgbImage& cover2,
                       const PipelineConfig& cfg)
   {
   if(message.empty())
      throw EmptyMessageError("cannot encrypt an empty message");

   const std::size_t needed = required_payload_bits(message.size(), cfg.cipher_mode);
   if(needed > capacity(cover1))
      throw CapacityError(needed, capacity(cover1), "cover 1");
   if(needed > capacity(cover2))
      throw CapacityError(needed, capacity(cover2), "cover 2");

   EncryptionResult r;
   r.seed = cfg.seed ? *cfg.seed : entropy_seed();
   SplitMix64 seeds(r.seed);
   const std::uint64_t share_seed = seeds.next();
   const std::uint64_t iv = seeds.next();

   const KeySchedule ks(cfg.key());
   r.ciphertext = encrypt_message(ks, message, cfg.cipher_mode, iv);
   r.encimg = ciphertext_to_image(r.ciphertext);
   r.shares = split(r.encimg, share_seed);
   r.steg1 = embed(cover1, StegoPayload::from_share(r.shares.sh1));
   r.steg2 = embed(cover2, StegoPayload::from_share(r.shares.sh2));
   return r;
   }

std::vector<std::uint8_t> dbvcs(const RgbImage& steg1, const RgbImage& steg2,
                                const PipelineConfig& cfg)
   {
   const BinaryImage rsh1 = extract(steg1).to_share();
   const BinaryImage rsh2 = extract(steg2).to_share();
   const BinaryImage combined = reconstruct_secret(rsh1, rsh2);
   const auto ciphertext = image_to_ciphertext(combined);
   const KeySchedule ks(cfg.key());
   return decrypt_message(ks, ciphertext, cfg.cipher_mode);
   }

std::vector<std::uint8_t> sweep_message(std::size_t size, std::uint64_t seed)
   {
   Xoshiro256 rng(seed);
   std::vector<std::uint8_t> m(size);
   for(auto& b : m)
      b = static_cast<std::uint8_t>(rng.next() >> 56);
   return m;
   }

std::vector<RunRecord> sweep(std::span<const std::size_t> sizes,
                             const RgbImage& cover1, const RgbImage& cover2,
                             const PipelineConfig& cfg, bool run_detectors)
   {
   const std::size_t available = std::min(capacity(cover1), capacity(cover2));
   for(std::size_t size : sizes)
      {
      if(size == 0)
         throw EmptyMessageError("sweep size 0 is not a valid message");
      const std::size_t needed = required_payload_bits(size, cfg.cipher_mode);
      if(needed > available)
         throw CapacityError(needed, available, "sweep size " + std::to_string(size) + " bytes");
      }

   const std::uint64_t base_seed = cfg.seed.value_or(0);
   std::vector<RunRecord> records;
   records.reserve(sizes.size());
   for(std::size_t i = 0; i != sizes.size(); ++i)
      {
      const auto start = std::chrono::steady_clock::now();
      PipelineConfig run_cfg = cfg;
      run_cfg.seed = base_seed + i;
      const auto message = sweep_message(sizes[i], base_seed + i);
      const EncryptionResult enc = ebvcs(message, cover1, cover2, run_cfg);

      RunRecord rec;
      rec.message_size_bytes = sizes[i];
      rec.share_width = enc.shares.sh1.width();
      rec.share_height = enc.shares.sh1.height();
      rec.embedded_bits = share_payload_bits(rec.share_width, rec.share_height);
      rec.metrics1 = measure(cover1, enc.steg1, sizes[i]);
      rec.metrics2 = measure(cover2, enc.steg2, sizes[i]);
      if(run_detectors)
         {
         rec.detector1 = analyze(enc.steg1);
         rec.detector2 = analyze(enc.steg2);
         }
      rec.wall_time = std::chrono::steady_clock::now() - start;
      records.push_back(std::move(rec));
      }
   return records;
   }

std::string sweep_csv(std::span<const RunRecord> records)
   {
   std::string out = metrics_csv_header() + "\n";
   for(const RunRecord& r : records)
      {
      out += to_csv_row(r.metrics1) + "\n";
      out += to_csv_row(r.metrics2) + "\n";
      }
   return out;
   }

}
