#include "aoxlab/scramblers.hpp"

#include <stdexcept>
#include <string>

namespace aoxlab {

OutputPermutation parse_permutation(std::string_view name) {
  for (auto perm : kAllPermutations) {
    if (to_string(perm) == name) return perm;
  }
  throw std::invalid_argument("unknown permutation '" + std::string(name) + "'");
}

std::string_view to_string(OutputPermutation perm) {
  switch (perm) {
    case OutputPermutation::std32:
      return "std32";
    case OutputPermutation::rev32:
      return "rev32";
    case OutputPermutation::std32lo:
      return "std32lo";
    case OutputPermutation::rev32lo:
      return "rev32lo";
    case OutputPermutation::std32hi:
      return "std32hi";
    case OutputPermutation::rev32hi:
      return "rev32hi";
  }
  return "?";
}

std::vector<std::uint32_t> permute_output(std::uint64_t word, OutputPermutation perm) {
  std::uint32_t buf[2];
  const int n = permute_output(word, perm, buf);
  return {buf, buf + n};
}

std::vector<std::uint8_t> bit0_stream(Engine& engine, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(engine.next() & 1);
  return bits;
}

}  // namespace aoxlab
