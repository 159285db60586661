#ifndef VCSTEGO_BLOWFISH_TABLES_HPP
#define VCSTEGO_BLOWFISH_TABLES_HPP

#include <array>
#include <cstdint>

namespace vcstego::detail {

extern const std::array<std::uint32_t, 18> kBlowfishInitP;
extern const std::array<std::array<std::uint32_t, 256>, 4> kBlowfishInitS;

}

#endif
