// Apache License, Version 2.0, refer to LICENSE.txt
#include "rbtest/random.hpp"

namespace rbtest {
namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

inline void mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
  const unsigned __int128 p =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline void philox2x64_10(std::uint64_t key, std::uint64_t c0, std::uint64_t c1,
                          std::uint64_t& r0, std::uint64_t& r1) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi, lo;
    mulhilo64(kPhiloxM, c0, hi, lo);
    c0 = hi ^ key ^ c1;
    c1 = lo;
    key += kWeyl;
  }
  r0 = c0;
  r1 = c1;
}

}  // namespace

std::uint64_t RandomStream::next_u64() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  std::uint64_t r0, r1;
  philox2x64_10(key_, c0_, counter_++, r0, r1);
  cached_ = r1;
  has_cached_ = true;
  return r0;
}

}  // namespace rbtest
