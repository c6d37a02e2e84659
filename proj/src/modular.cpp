#include "aec/modular.hpp"

namespace aec::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t point(std::string_view variable, int set) {
  // FNV-1a over the name, then mixed with the set index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : variable) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t p = mix(h ^ mix(0x5eed0000ULL + static_cast<std::uint64_t>(set))) % kPrime;
  return p < 2 ? p + 2 : p;
}

}  // namespace aec::modp
