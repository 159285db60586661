/*
* In-memory image types
*/

#include <vcstego/errors.hpp>
#include <vcstego/image.hpp>

#include <algorithm>
#include <string>

namespace vcstego {

const char* error_name(ErrorCode code)
   {
   switch(code)
      {
      case ErrorCode::invalid_argument: return "InvalidArgumentError";
      case ErrorCode::key_length: return "KeyLengthError";
      case ErrorCode::empty_key: return "EmptyKeyError";
      case ErrorCode::empty_message: return "EmptyMessageError";
      case ErrorCode::length: return "LengthError";
      case ErrorCode::padding: return "PaddingError";
      case ErrorCode::empty_image: return "EmptyImageError";
      case ErrorCode::dimension_mismatch: return "DimensionMismatchError";
      case ErrorCode::inconsistent_block: return "InconsistentBlockError";
      case ErrorCode::empty_input: return "EmptyInputError";
      case ErrorCode::bad_magic: return "BadMagicError";
      case ErrorCode::length_overflow: return "LengthOverflowError";
      case ErrorCode::malformed_payload: return "MalformedPayloadError";
      case ErrorCode::capacity: return "CapacityError";
      case ErrorCode::identical_images: return "IdenticalImagesError";
      case ErrorCode::plane_range: return "PlaneRangeError";
      case ErrorCode::image_too_small: return "ImageTooSmallError";
      case ErrorCode::degenerate_image: return "DegenerateImageError";
      case ErrorCode::no_detectors: return "NoDetectorsError";
      case ErrorCode::image_io: return "ImageIoError";
      }
   return "Error";
   }

namespace {

std::string capacity_message(std::size_t required, std::size_t available)
   {
   return "payload needs " + std::to_string(required) + " bits but cover holds " +
          std::to_string(available) + " (short by " +
          std::to_string(required > available ? required - available : 0) + ")";
   }

}

CapacityError::CapacityError(std::size_t required_bits, std::size_t available_bits) :
   Error(ErrorCode::capacity, capacity_message(required_bits, available_bits)),
   m_required(required_bits), m_available(available_bits)
   {
   }

CapacityError::CapacityError(std::size_t required_bits, std::size_t available_bits,
                             const std::string& context) :
   Error(ErrorCode::capacity, context + ": " + capacity_message(required_bits, available_bits)),
   m_required(required_bits), m_available(available_bits)
   {
   }

BinaryImage::BinaryImage(std::size_t width, std::size_t height) :
   m_width(width), m_height(height), m_bits(width * height, 0)
   {
   }

BinaryImage::BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits) :
   m_width(width), m_height(height), m_bits(std::move(bits))
   {
   if(m_bits.size() != width * height)
      throw DimensionMismatchError("binary image: " + std::to_string(m_bits.size()) +
                                   " bits for " + std::to_string(width) + "x" +
                                   std::to_string(height));
   if(std::any_of(m_bits.begin(), m_bits.end(), [](std::uint8_t b) { return b > 1; }))
      throw InvalidArgumentError("binary image: pixel values must be 0 or 1");
   }

std::size_t BinaryImage::count_black() const noexcept
   {
   return static_cast<std::size_t>(std::count(m_bits.begin(), m_bits.end(), std::uint8_t{1}));
   }

RgbImage::RgbImage(std::size_t width, std::size_t height) :
   m_width(width), m_height(height), m_samples(3 * width * height, 0)
   {
   }

RgbImage::RgbImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples) :
   m_width(width), m_height(height), m_samples(std::move(samples))
   {
   if(m_samples.size() != 3 * width * height)
      throw DimensionMismatchError("rgb image: " + std::to_string(m_samples.size()) +
                                   " samples for " + std::to_string(width) + "x" +
                                   std::to_string(height));
   }

std::vector<std::uint8_t> luminance_bytes(const RgbImage& img)
   {
   std::vector<std::uint8_t> out(img.pixel_count());
   const auto s = img.samples();
   for(std::size_t i = 0; i != out.size(); ++i)
      out[i] = luminance(s[3 * i], s[3 * i + 1], s[3 * i + 2]);
   return out;
   }

}
