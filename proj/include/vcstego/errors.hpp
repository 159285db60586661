/*
* Error types shared by all vcstego modules
*/

#ifndef VCSTEGO_ERRORS_HPP
#define VCSTEGO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcstego {

/// Stable error classes. The CLI maps each one to its own exit code.
enum class ErrorCode : int {
   invalid_argument = 2,
   key_length = 10,
   empty_key = 11,
   empty_message = 12,
   length = 13,
   padding = 14,
   empty_image = 20,
   dimension_mismatch = 21,
   inconsistent_block = 22,
   empty_input = 30,
   bad_magic = 31,
   length_overflow = 32,
   malformed_payload = 33,
   capacity = 40,
   identical_images = 50,
   plane_range = 60,
   image_too_small = 61,
   degenerate_image = 62,
   no_detectors = 63,
   image_io = 70,
   };

const char* error_name(ErrorCode code);

class Error : public std::runtime_error
   {
   public:
      Error(ErrorCode code, const std::string& what) :
         std::runtime_error(what), m_code(code) {}

      ErrorCode code() const noexcept { return m_code; }
      int exit_code() const noexcept { return static_cast<int>(m_code); }

   private:
      ErrorCode m_code;
   };

#define VCSTEGO_DEFINE_ERROR(NAME, CODE)                              \
   class NAME : public Error                                          \
      {                                                               \
      public:                                                         \
         explicit NAME(const std::string& what) : Error(CODE, what) {} \
      }

VCSTEGO_DEFINE_ERROR(InvalidArgumentError, ErrorCode::invalid_argument);
VCSTEGO_DEFINE_ERROR(KeyLengthError, ErrorCode::key_length);
VCSTEGO_DEFINE_ERROR(EmptyKeyError, ErrorCode::empty_key);
VCSTEGO_DEFINE_ERROR(EmptyMessageError, ErrorCode::empty_message);
VCSTEGO_DEFINE_ERROR(LengthError, ErrorCode::length);
VCSTEGO_DEFINE_ERROR(PaddingError, ErrorCode::padding);
VCSTEGO_DEFINE_ERROR(EmptyImageError, ErrorCode::empty_image);
VCSTEGO_DEFINE_ERROR(DimensionMismatchError, ErrorCode::dimension_mismatch);
VCSTEGO_DEFINE_ERROR(InconsistentBlockError, ErrorCode::inconsistent_block);
VCSTEGO_DEFINE_ERROR(EmptyInputError, ErrorCode::empty_input);
VCSTEGO_DEFINE_ERROR(BadMagicError, ErrorCode::bad_magic);
VCSTEGO_DEFINE_ERROR(LengthOverflowError, ErrorCode::length_overflow);
VCSTEGO_DEFINE_ERROR(MalformedPayloadError, ErrorCode::malformed_payload);
VCSTEGO_DEFINE_ERROR(IdenticalImagesError, ErrorCode::identical_images);
VCSTEGO_DEFINE_ERROR(PlaneRangeError, ErrorCode::plane_range);
VCSTEGO_DEFINE_ERROR(ImageTooSmallError, ErrorCode::image_too_small);
VCSTEGO_DEFINE_ERROR(DegenerateImageError, ErrorCode::degenerate_image);
VCSTEGO_DEFINE_ERROR(NoDetectorsError, ErrorCode::no_detectors);
VCSTEGO_DEFINE_ERROR(ImageIoError, ErrorCode::image_io);

#undef VCSTEGO_DEFINE_ERROR

/// Payload does not fit the cover. Carries both bit counts.
class CapacityError : public Error
   {
   public:
      CapacityError(std::size_t required_bits, std::size_t available_bits);
      CapacityError(std::size_t required_bits, std::size_t available_bits,
                    const std::string& context);

      std::size_t required_bits() const noexcept { return m_required; }
      std::size_t available_bits() const noexcept { return m_available; }
      std::size_t deficit_bits() const noexcept { return m_required - m_available; }

   private:
      std::size_t m_required;
      std::size_t m_available;
   };

}

#endif
