#pragma once

#include <cstdint>
#include <string_view>

namespace aec::modp {

/// Mersenne prime 2^61 - 1, the modulus for all fingerprints and residues.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kPrime - b;
}

inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : kPrime - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return add(lo, hi);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp);

/// Multiplicative inverse; `a` must be nonzero.
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

/// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t x);

/// Number of fixed evaluation point sets available for fingerprints.
inline constexpr int kPointSets = 8;

/// Deterministic pseudorandom evaluation point for `variable` in point set `set`.
std::uint64_t point(std::string_view variable, int set);

}  // namespace aec::modp
