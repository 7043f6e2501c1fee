// Apache License, Version 2.0, refer to LICENSE.txt
#ifndef RBTEST_RANDOM_HPP
#define RBTEST_RANDOM_HPP

#include <cstdint>

namespace rbtest {

/// Counter-based random stream (Philox2x64-10, Salmon et al. 2011).
///
/// Every draw is a pure function of (seed, stream_index, counter), so two
/// streams constructed with the same (seed, stream_index) produce
/// bit-identical sequences, and distinct stream_index values occupy disjoint
/// 128-bit counter blocks -- non-overlap holds by construction, not by luck.
///
/// substream(i) positions a copy of the stream at counter block i << 32,
/// giving each Monte Carlo replicate its own window of 2^33 values. Results
/// of a replicate loop are therefore independent of how the loop is
/// partitioned across threads. Do not mix direct draws on a parent stream
/// with draws on its substreams; use one or the other.
class RandomStream {
 public:
  RandomStream() : RandomStream(0, 0) {}
  RandomStream(std::uint64_t seed, std::uint64_t stream_index)
      : key_(seed), c0_(stream_index), counter_(0) {}

  std::uint64_t seed() const { return key_; }
  std::uint64_t stream_index() const { return c0_; }

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in the open interval (0, 1); safe to pass through a quantile
  /// function without hitting the poles.
  double next_open_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Stream positioned at counter block `block` (block < 2^32).
  RandomStream substream(std::uint64_t block) const {
    RandomStream s(key_, c0_);
    s.counter_ = block << 32;
    return s;
  }

 private:
  std::uint64_t key_;
  std::uint64_t c0_;
  std::uint64_t counter_;
  std::uint64_t cached_ = 0;
  bool has_cached_ = false;
};

}  // namespace rbtest

#endif
