#pragma once

#include <cstdint>
#include <vector>

#include "braidhom/braid.hpp"

namespace braidhom {

// Deterministic splitmix64 stream; identical output on every platform, so
// seeded corpora are reproducible byte for byte.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  int below(int n);  // uniform in [0, n)

 private:
  std::uint64_t state_;
};

// All braid words over sigma_1^{+-1}, ..., sigma_{strands-1}^{+-1} of length
// 1..max_len (no cancellation applied).
std::vector<BraidWord> exhaustive_words(int strands, int max_len);

// Seeded random words of exactly the given length. With nonzero_exponent_sum
// set, words are redrawn until their exponent sum is nonzero.
std::vector<BraidWord> random_words(int strands, int count, int length, std::uint64_t seed,
                                    bool nonzero_exponent_sum = false);

}  // namespace braidhom
