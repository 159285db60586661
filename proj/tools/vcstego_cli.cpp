/*
* vcstego command line tool
*
*   encrypt  message -> two stego PNGs
*   decrypt  two stego images -> message
*   metrics  MSE / PSNR / histogram comparison of two images
*   analyze  statistical detectors and bit-plane dumps for one image
*   sweep    PSNR / MSE over a list of message sizes, as CSV
*/

#include <vcstego/codec.hpp>
#include <vcstego/errors.hpp>
#include <vcstego/image_io.hpp>
#include <vcstego/metrics.hpp>
#include <vcstego/pipeline.hpp>
#include <vcstego/steganalysis.hpp>
#include <vcstego/stego.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace vcstego;

namespace {

std::vector<std::uint8_t> to_bytes(const std::string& s)
   {
   return std::vector<std::uint8_t>(s.begin(), s.end());
   }

std::vector<std::uint8_t> read_file(const fs::path& p)
   {
   std::ifstream in(p, std::ios::binary);
   if(!in)
      throw InvalidArgumentError("cannot read " + p.string());
   return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
   }

void write_text(const fs::path& p, const std::string& text)
   {
   std::ofstream out(p, std::ios::binary);
   if(!out)
      throw InvalidArgumentError("cannot write " + p.string());
   out << text;
   }

struct KeyOptions
   {
   std::string passphrase;
   std::string key_image;
   std::string key_image_mode = "supplement";
   bool cbc = false;

   void attach(CLI::App* cmd, bool required)
      {
      auto* k = cmd->add_option("--key", passphrase, "Passphrase");
      if(required)
         k->required();
      cmd->add_option("--key-image", key_image, "Key image (e.g. fingerprint), PNG or BMP")
         ->check(CLI::ExistingFile);
      cmd->add_option("--key-image-mode", key_image_mode, "How the key image is combined")
         ->check(CLI::IsMember({"supplement", "replace"}));
      cmd->add_flag("--cbc", cbc, "CBC mode instead of ECB (must match on decrypt)");
      }

   PipelineConfig config() const
      {
      PipelineConfig cfg;
      cfg.passphrase = to_bytes(passphrase);
      if(!key_image.empty())
         cfg.key_image = read_rgb(key_image);
      cfg.key_image_mode = key_image_mode == "replace" ? KeyImageMode::replace : KeyImageMode::supplement;
      cfg.cipher_mode = cbc ? CipherMode::cbc : CipherMode::ecb;
      return cfg;
      }
   };

std::vector<std::size_t> parse_sizes(const std::string& list)
   {
   std::vector<std::size_t> sizes;
   std::stringstream ss(list);
   std::string item;
   while(std::getline(ss, item, ','))
      {
      if(item.empty())
         continue;
      std::size_t pos = 0;
      unsigned long long v = 0;
      try
         {
         v = std::stoull(item, &pos);
         }
      catch(const std::exception&)
         {
         pos = 0;
         }
      if(pos != item.size())
         throw InvalidArgumentError("bad size in --sizes: '" + item + "'");
      sizes.push_back(static_cast<std::size_t>(v));
      }
   if(sizes.empty())
      throw InvalidArgumentError("--sizes is empty");
   return sizes;
   }

}

int main(int argc, char** argv)
   {
   CLI::App app{"Blowfish + (2,2) visual cryptography + LSB steganography"};
   app.require_subcommand(1);

   // encrypt
   auto* enc = app.add_subcommand("encrypt", "Hide a message in two cover images");
   KeyOptions enc_key;
   std::string message, message_file, cover1, cover2, out1, out2, dump_encimg, dump_shares;
   std::vector<std::string> split_output;
   std::optional<std::uint64_t> seed;
   auto* msg_opt = enc->add_option("-m,--message", message, "Message text");
   auto* msg_file_opt = enc->add_option("--message-file", message_file, "Read the message from a file")
                           ->check(CLI::ExistingFile);
   msg_opt->excludes(msg_file_opt);
   enc_key.attach(enc, true);
   enc->add_option("--cover1", cover1, "First cover image")->required()->check(CLI::ExistingFile);
   enc->add_option("--cover2", cover2, "Second cover image")->required()->check(CLI::ExistingFile);
   enc->add_option("--seed", seed, "Seed for shares and IV (default: OS entropy)");
   auto* o1 = enc->add_option("--out1", out1, "First stego PNG");
   auto* o2 = enc->add_option("--out2", out2, "Second stego PNG");
   auto* so = enc->add_option("--split-output", split_output,
                              "Write steg1.png and steg2.png into two separate directories")
                 ->expected(2);
   so->excludes(o1)->excludes(o2);
   enc->add_option("--dump-encimg", dump_encimg, "Also write the ciphertext image (PNG)");
   enc->add_option("--dump-shares", dump_shares, "Also write share1.png / share2.png to this directory");

   // decrypt
   auto* dec = app.add_subcommand("decrypt", "Recover a message from two stego images");
   KeyOptions dec_key;
   std::string steg1, steg2, out_file;
   dec->add_option("--steg1", steg1, "First stego image")->required()->check(CLI::ExistingFile);
   dec->add_option("--steg2", steg2, "Second stego image")->required()->check(CLI::ExistingFile);
   dec_key.attach(dec, true);
   dec->add_option("-o,--out", out_file, "Write the message here instead of stdout");

   // metrics
   auto* met = app.add_subcommand("metrics", "Compare a reference and a test image");
   std::string ref, test;
   bool as_csv = false, no_hist = false;
   std::size_t message_size = 0;
   met->add_option("--ref", ref, "Reference (cover) image")->required()->check(CLI::ExistingFile);
   met->add_option("--test", test, "Test (stego) image")->required()->check(CLI::ExistingFile);
   met->add_option("--message-size", message_size, "Message size recorded in the report");
   met->add_flag("--csv", as_csv, "CSV row instead of JSON");
   met->add_flag("--no-histograms", no_hist, "Omit histograms from the JSON report");

   // analyze
   auto* ana = app.add_subcommand("analyze", "Run steganalysis on one image");
   std::string image, bitplanes;
   double threshold = kDefaultFusionThreshold;
   std::size_t window = kDefaultChiWindow;
   ana->add_option("--image", image, "Image to analyse")->required()->check(CLI::ExistingFile);
   ana->add_option("--threshold", threshold, "Fusion threshold")->check(CLI::Range(0.0, 1.0));
   ana->add_option("--window", window, "Chi-square window in samples");
   ana->add_option("--bitplanes", bitplanes, "Write all 8 bit-planes per channel into this directory");

   // sweep
   auto* swp = app.add_subcommand("sweep", "PSNR / MSE over message sizes");
   KeyOptions swp_key;
   std::string sizes_arg, csv_out, json_out;
   std::vector<std::string> covers;
   std::uint64_t sweep_seed = 0;
   bool no_detectors = false;
   swp->add_option("--sizes", sizes_arg, "Comma-separated message sizes in bytes")->required();
   swp->add_option("--covers", covers, "Two cover images")->required()->expected(2)
      ->check(CLI::ExistingFile);
   swp->add_option("--csv", csv_out, "CSV output (default: stdout)");
   swp->add_option("--json", json_out, "Also write per-run detector reports as JSON");
   swp->add_option("--seed", sweep_seed, "Base seed for messages and shares");
   swp->add_flag("--no-detectors", no_detectors, "Skip steganalysis of each stego image");
   swp_key.passphrase = "sweep-key";
   swp_key.attach(swp, false);

   CLI11_PARSE(app, argc, argv);

   try
      {
      if(*enc)
         {
         if(msg_opt->count() == 0 && msg_file_opt->count() == 0)
            throw InvalidArgumentError("one of --message or --message-file is required");
         if(split_output.empty() && (out1.empty() || out2.empty()))
            throw InvalidArgumentError("give --out1 and --out2, or --split-output DIR_A DIR_B");

         const auto m = message_file.empty() ? to_bytes(message) : read_file(message_file);
         PipelineConfig cfg = enc_key.config();
         cfg.seed = seed;
         const RgbImage c1 = read_rgb(cover1);
         const RgbImage c2 = read_rgb(cover2);
         const EncryptionResult r = ebvcs(m, c1, c2, cfg);

         fs::path p1 = out1, p2 = out2;
         if(!split_output.empty())
            {
            fs::create_directories(split_output[0]);
            fs::create_directories(split_output[1]);
            p1 = fs::path(split_output[0]) / "steg1.png";
            p2 = fs::path(split_output[1]) / "steg2.png";
            }
         write_rgb_png(p1, r.steg1);
         write_rgb_png(p2, r.steg2);
         if(!dump_encimg.empty())
            write_binary_png(dump_encimg, r.encimg);
         if(!dump_shares.empty())
            {
            fs::create_directories(dump_shares);
            write_binary_png(fs::path(dump_shares) / "share1.png", r.shares.sh1);
            write_binary_png(fs::path(dump_shares) / "share2.png", r.shares.sh2);
            }
         std::cerr << "wrote " << p1.string() << " and " << p2.string() << " (share "
                   << r.shares.sh1.width() << "x" << r.shares.sh1.height() << ", "
                   << share_payload_bits(r.shares.sh1.width(), r.shares.sh1.height()) << " of "
                   << capacity(c1) << " bits)\n";
         }
      else if(*dec)
         {
         const auto m = dbvcs(read_rgb(steg1), read_rgb(steg2), dec_key.config());
         if(out_file.empty())
            std::cout.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(m.size()));
         else
            write_text(out_file, std::string(m.begin(), m.end()));
         }
      else if(*met)
         {
         const MetricsReport r = measure(read_rgb(ref), read_rgb(test), message_size);
         if(as_csv)
            std::cout << metrics_csv_header() << "\n" << to_csv_row(r) << "\n";
         else
            std::cout << to_json(r, !no_hist) << "\n";
         }
      else if(*ana)
         {
         const RgbImage img = read_rgb(image);
         if(window < kMinChiWindow)
            throw InvalidArgumentError("--window must be at least 512");
         std::cout << to_json(analyze(img, threshold, window)) << "\n";
         if(!bitplanes.empty())
            {
            fs::create_directories(bitplanes);
            const std::string stem = fs::path(image).stem().string();
            for(PlaneChannel c : {PlaneChannel::red, PlaneChannel::green, PlaneChannel::blue, PlaneChannel::luma})
               for(int k = 0; k != 8; ++k)
                  write_binary_png(fs::path(bitplanes) / (stem + "_" + plane_channel_name(c) + "_bit" +
                                                          std::to_string(k) + ".png"),
                                   bitplane(img, k, c));
            }
         }
      else if(*swp)
         {
         const auto sizes = parse_sizes(sizes_arg);
         PipelineConfig cfg = swp_key.config();
         cfg.seed = sweep_seed;
         const auto records = sweep(sizes, read_rgb(covers[0]), read_rgb(covers[1]), cfg, !no_detectors);
         const std::string csv = sweep_csv(records);
         if(csv_out.empty())
            std::cout << csv;
         else
            write_text(csv_out, csv);
         if(!json_out.empty())
            {
            std::string js = "[\n";
            for(std::size_t i = 0; i != records.size(); ++i)
               {
               const RunRecord& r = records[i];
               js += "{\"message_size_bytes\": " + std::to_string(r.message_size_bytes) +
                     ", \"share_width\": " + std::to_string(r.share_width) +
                     ", \"share_height\": " + std::to_string(r.share_height) +
                     ", \"embedded_bits\": " + std::to_string(r.embedded_bits) +
                     ", \"wall_time_s\": " + std::to_string(r.wall_time.count()) +
                     ",\n \"metrics1\": " + to_json(r.metrics1, false) +
                     ",\n \"metrics2\": " + to_json(r.metrics2, false);
               if(!no_detectors)
                  js += ",\n \"detector1\": " + to_json(r.detector1) +
                        ",\n \"detector2\": " + to_json(r.detector2);
               js += "}";
               js += (i + 1 != records.size()) ? ",\n" : "\n";
               }
            js += "]\n";
            write_text(json_out, js);
            }
         }
      }
   catch(const Error& e)
      {
      std::cerr << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
      return e.exit_code();
      }
   catch(const std::exception& e)
      {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
      }
   return 0;
   }
