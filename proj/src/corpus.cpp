#include "braidhom/corpus.hpp"

#include <stdexcept>

namespace braidhom {

std::uint64_t SeededRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SeededRng::below(int n) {
  if (n <= 0) throw std::invalid_argument("below() needs n > 0");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

std::vector<BraidWord> exhaustive_words(int strands, int max_len) {
  std::vector<BraidWord> out;
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<std::vector<int>> layer = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer)
      for (int l : alphabet) {
        auto v = w;
        v.push_back(l);
        out.emplace_back(strands, v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<BraidWord> random_words(int strands, int count, int length, std::uint64_t seed,
                                    bool nonzero_exponent_sum) {
  if (strands < 2) throw std::invalid_argument("random words need at least 2 strands");
  SeededRng rng(seed);
  std::vector<BraidWord> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> letters;
    letters.reserve(length);
    for (int j = 0; j < length; ++j) {
      int idx = 1 + rng.below(strands - 1);
      letters.push_back(rng.below(2) ? idx : -idx);
    }
    BraidWord w(strands, std::move(letters));
    if (nonzero_exponent_sum && exponent_sum(w) == 0) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace braidhom
