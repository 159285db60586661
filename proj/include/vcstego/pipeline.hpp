/*
* End-to-end encryption (Blowfish -> image -> VCS shares -> LSB covers)
* and the matching decryption, plus the message-size sweep harness.
*/

#ifndef VCSTEGO_PIPELINE_HPP
#define VCSTEGO_PIPELINE_HPP

#include <vcstego/blowfish.hpp>
#include <vcstego/image.hpp>
#include <vcstego/metrics.hpp>
#include <vcstego/steganalysis.hpp>
#include <vcstego/vcs.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vcstego {

struct PipelineConfig
   {
   std::vector<std::uint8_t> passphrase;
   std::optional<RgbImage> key_image;
   KeyImageMode key_image_mode = KeyImageMode::supplement;
   CipherMode cipher_mode = CipherMode::ecb;
   /// Share and IV randomness; drawn from the OS when empty.
   std::optional<std::uint64_t> seed;

   KeyMaterial key() const { return derive_key(passphrase, key_image, key_image_mode); }
   };

/// Everything produced by one encryption run; the two stego images are
/// the deliverables, the rest is kept for inspection.
struct EncryptionResult
   {
   RgbImage steg1;
   RgbImage steg2;
   std::vector<std::uint8_t> ciphertext;
   BinaryImage encimg;
   SharePair shares;
   std::uint64_t seed = 0;
   };

/// Bits one share occupies in a cover for a message of this many bytes.
std::size_t required_payload_bits(std::size_t message_bytes, CipherMode mode = CipherMode::ecb);

/**
* Encrypts, converts to ENCIMG, splits into two shares and embeds share i
* into cover i. Capacity is checked for both covers before any embedding.
* Throws EmptyMessageError, KeyLengthError, EmptyKeyError, CapacityError.
*/
EncryptionResult ebvcs(std::span<const std::uint8_t> message,
                       const RgbImage& cover1, const RgbImage& cover2,
                       const PipelineConfig& cfg);

/**
* Extracts both shares, XOR-combines them, decodes the ciphertext and
* decrypts it. The stego images may be given in either order. Throws
* BadMagicError, InconsistentBlockError, PaddingError and friends; no
* plaintext is returned on failure.
*/
std::vector<std::uint8_t> dbvcs(const RgbImage& steg1, const RgbImage& steg2,
                                const PipelineConfig& cfg);

struct RunRecord
   {
   std::size_t message_size_bytes = 0;
   std::size_t share_width = 0;
   std::size_t share_height = 0;
   std::size_t embedded_bits = 0;
   MetricsReport metrics1;
   MetricsReport metrics2;
   DetectorReport detector1;
   DetectorReport detector2;
   std::chrono::duration<double> wall_time{};
   };

/// Seeded pseudorandom message bytes.
std::vector<std::uint8_t> sweep_message(std::size_t size, std::uint64_t seed);

/**
* One pipeline run per message size with seeded random messages; the
* message and shares for size i use seed + i. All sizes are checked against
* both covers first; the first one that does not fit raises CapacityError.
* A size of 0 raises EmptyMessageError. The config seed defaults to 0.
*/
std::vector<RunRecord> sweep(std::span<const std::size_t> sizes,
                             const RgbImage& cover1, const RgbImage& cover2,
                             const PipelineConfig& cfg, bool run_detectors = true);

/// Header plus one row per (size, cover) with the metrics CSV columns.
std::string sweep_csv(std::span<const RunRecord> records);

}

#endif
