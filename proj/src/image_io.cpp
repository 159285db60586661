/*
* PNG / BMP file I/O
*/

#include <vcstego/errors.hpp>
#include <vcstego/image_io.hpp>

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

namespace vcstego {

namespace {

struct FileCloser
   {
   void operator()(std::FILE* f) const { std::fclose(f); }
   };
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode)
   {
   FilePtr f(std::fopen(path.c_str(), mode));
   if(!f)
      throw ImageIoError("cannot open " + path.string());
   return f;
   }

[[noreturn]] void png_fail(png_structp png, png_const_charp msg)
   {
   auto* what = static_cast<std::string*>(png_get_error_ptr(png));
   if(what)
      *what = msg;
   png_longjmp(png, 1);
   }

void png_warn(png_structp, png_const_charp) {}

std::vector<std::uint8_t> read_all(const std::filesystem::path& path)
   {
   std::ifstream in(path, std::ios::binary);
   if(!in)
      throw ImageIoError("cannot open " + path.string());
   return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
   }

RgbImage read_png(const std::filesystem::path& path)
   {
   FilePtr f = open_file(path, "rb");
   std::string error;
   png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_fail, png_warn);
   png_infop info = png ? png_create_info_struct(png) : nullptr;
   if(!png || !info)
      {
      png_destroy_read_struct(&png, nullptr, nullptr);
      throw ImageIoError("libpng initialization failed");
      }

   std::vector<std::uint8_t> rows;
   std::vector<png_bytep> row_ptrs;
   png_uint_32 width = 0, height = 0;

   if(setjmp(png_jmpbuf(png)))
      {
      png_destroy_read_struct(&png, &info, nullptr);
      throw ImageIoError("PNG decode error in " + path.string() + ": " + error);
      }

   png_init_io(png, f.get());
   png_read_info(png, info);

   const int color = png_get_color_type(png, info);
   if(png_get_bit_depth(png, info) == 16)
      png_set_strip_16(png);
   if(color == PNG_COLOR_TYPE_PALETTE)
      png_set_palette_to_rgb(png);
   if(color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
      {
      png_set_expand_gray_1_2_4_to_8(png);
      png_set_gray_to_rgb(png);
      }
   if(png_get_valid(png, info, PNG_INFO_tRNS))
      png_set_tRNS_to_alpha(png);
   png_set_strip_alpha(png);
   png_read_update_info(png, info);

   width = png_get_image_width(png, info);
   height = png_get_image_height(png, info);
   const std::size_t stride = png_get_rowbytes(png, info);
   if(stride != 3 * std::size_t{width})
      {
      png_destroy_read_struct(&png, &info, nullptr);
      throw ImageIoError("unexpected PNG row layout in " + path.string());
      }

   rows.resize(stride * height);
   row_ptrs.resize(height);
   for(png_uint_32 y = 0; y != height; ++y)
      row_ptrs[y] = rows.data() + y * stride;
   png_read_image(png, row_ptrs.data());
   png_read_end(png, nullptr);
   png_destroy_read_struct(&png, &info, nullptr);

   return RgbImage(width, height, std::move(rows));
   }

std::uint32_t le32(const std::vector<std::uint8_t>& d, std::size_t off)
   {
   return std::uint32_t{d[off]} | (std::uint32_t{d[off + 1]} << 8) |
          (std::uint32_t{d[off + 2]} << 16) | (std::uint32_t{d[off + 3]} << 24);
   }

std::uint16_t le16(const std::vector<std::uint8_t>& d, std::size_t off)
   {
   return static_cast<std::uint16_t>(d[off] | (d[off + 1] << 8));
   }

RgbImage read_bmp(const std::filesystem::path& path, const std::vector<std::uint8_t>& d)
   {
   if(d.size() < 54)
      throw ImageIoError("truncated BMP header in " + path.string());
   const std::uint32_t data_off = le32(d, 10);
   const std::int32_t w = static_cast<std::int32_t>(le32(d, 18));
   const std::int32_t h_raw = static_cast<std::int32_t>(le32(d, 22));
   const std::uint16_t bpp = le16(d, 28);
   const std::uint32_t compression = le32(d, 30);
   if((bpp != 24 && bpp != 32) || (compression != 0 && compression != 3) || w <= 0 || h_raw == 0)
      throw ImageIoError("only uncompressed 24/32-bit BMP is supported: " + path.string());

   const bool top_down = h_raw < 0;
   const std::size_t width = static_cast<std::size_t>(w);
   const std::size_t height = static_cast<std::size_t>(top_down ? -std::int64_t{h_raw} : h_raw);
   const std::size_t bytes_pp = bpp / 8;
   const std::size_t stride = (width * bytes_pp + 3) / 4 * 4;
   if(data_off + stride * height > d.size())
      throw ImageIoError("truncated BMP pixel data in " + path.string());

   RgbImage img(width, height);
   for(std::size_t row = 0; row != height; ++row)
      {
      const std::size_t y = top_down ? row : height - 1 - row;
      const std::uint8_t* src = d.data() + data_off + row * stride;
      for(std::size_t x = 0; x != width; ++x)
         {
         img.set(x, y, Channel::blue, src[x * bytes_pp]);
         img.set(x, y, Channel::green, src[x * bytes_pp + 1]);
         img.set(x, y, Channel::red, src[x * bytes_pp + 2]);
         }
      }
   return img;
   }

void write_png(const std::filesystem::path& path, std::size_t width, std::size_t height,
               int bit_depth, int color_type, const std::vector<std::uint8_t>& rows,
               std::size_t stride)
   {
   FilePtr f = open_file(path, "wb");
   std::string error;
   png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, png_fail, png_warn);
   png_infop info = png ? png_create_info_struct(png) : nullptr;
   if(!png || !info)
      {
      png_destroy_write_struct(&png, nullptr);
      throw ImageIoError("libpng initialization failed");
      }
   std::vector<png_bytep> row_ptrs(height);
   for(std::size_t y = 0; y != height; ++y)
      row_ptrs[y] = const_cast<png_bytep>(rows.data() + y * stride);

   if(setjmp(png_jmpbuf(png)))
      {
      png_destroy_write_struct(&png, &info);
      throw ImageIoError("PNG encode error for " + path.string() + ": " + error);
      }
   png_init_io(png, f.get());
   png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
                bit_depth, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                PNG_FILTER_TYPE_DEFAULT);
   png_write_info(png, info);
   png_write_image(png, row_ptrs.data());
   png_write_end(png, nullptr);
   png_destroy_write_struct(&png, &info);
   }

void reject_lossy(const std::filesystem::path& path)
   {
   std::string ext = path.extension().string();
   std::transform(ext.begin(), ext.end(), ext.begin(),
                  [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
   if(ext == ".jpg" || ext == ".jpeg" || ext == ".jfif")
      throw ImageIoError("refusing to write " + path.string() +
                         ": JPEG compression would destroy the LSB-embedded payload; use .png");
   }

}

RgbImage read_rgb(const std::filesystem::path& path)
   {
   static constexpr std::array<std::uint8_t, 8> png_sig = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
   const auto data = read_all(path);
   if(data.size() >= 8 && std::equal(png_sig.begin(), png_sig.end(), data.begin()))
      return read_png(path);
   if(data.size() >= 2 && data[0] == 'B' && data[1] == 'M')
      return read_bmp(path, data);
   throw ImageIoError("unsupported image format (expected PNG or BMP): " + path.string());
   }

void write_rgb_png(const std::filesystem::path& path, const RgbImage& img)
   {
   reject_lossy(path);
   if(img.empty())
      throw EmptyImageError("cannot write an empty image");
   std::vector<std::uint8_t> rows(img.samples().begin(), img.samples().end());
   write_png(path, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGB, rows, 3 * img.width());
   }

void write_binary_png(const std::filesystem::path& path, const BinaryImage& img)
   {
   reject_lossy(path);
   if(img.empty())
      throw EmptyImageError("cannot write an empty image");
   const std::size_t stride = (img.width() + 7) / 8;
   std::vector<std::uint8_t> rows(stride * img.height(), 0);
   for(std::size_t y = 0; y != img.height(); ++y)
      for(std::size_t x = 0; x != img.width(); ++x)
         if(!img.at(x, y)) // white sample is 1 in a 1-bit grayscale PNG
            rows[y * stride + x / 8] |= static_cast<std::uint8_t>(0x80 >> (x % 8));
   write_png(path, img.width(), img.height(), 1, PNG_COLOR_TYPE_GRAY, rows, stride);
   }

BinaryImage read_binary(const std::filesystem::path& path)
   {
   const RgbImage rgb = read_rgb(path);
   const auto lum = luminance_bytes(rgb);
   std::vector<std::uint8_t> bits(lum.size());
   std::transform(lum.begin(), lum.end(), bits.begin(),
                  [](std::uint8_t v) { return std::uint8_t(v < 128 ? 1 : 0); });
   return BinaryImage(rgb.width(), rgb.height(), std::move(bits));
   }

}
