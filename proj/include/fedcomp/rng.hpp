#pragma once

#include <cstdint>
#include <random>

namespace fedcomp {

enum class RngPurpose : std::uint64_t {
  DataGen = 0x11,
  Minibatch = 0x22,
  Sampling = 0x33,
  Init = 0x44,
};

//! Deterministic keyed random stream.
//!
//! A stream is fully determined by (global_seed, round, client, purpose);
//! identical keys give identical byte streams regardless of what other
//! streams were drawn in between, so clients can run in any order (or in
//! parallel) without changing results. Gaussians use the Marsaglia polar
//! method on top of 53-bit uniforms, which keeps every draw a deterministic
//! function of the mt19937_64 output sequence.
class RngStream {
 public:
  RngStream(std::uint64_t global_seed, std::uint64_t round, std::uint64_t client,
            RngPurpose purpose);

  std::uint64_t next_u64() { return gen_(); }

  //! Uniform on [0, 1) with 53 random bits.
  double uniform();

  //! Standard normal (Marsaglia polar, pairs cached).
  double normal();

  //! Uniform integer in [0, n), rejection-sampled (unbiased).
  int uniform_int(int n);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

//! SplitMix64 finalizer; used to mix stream keys.
std::uint64_t mix64(std::uint64_t x);

}  // namespace fedcomp
