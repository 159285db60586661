#include <vcstego/rng.hpp>

#include <random>

namespace vcstego {

std::uint64_t entropy_seed()
   {
   std::random_device rd;
   return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
   }

}
