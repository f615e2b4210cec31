#pragma once
// Type A_n realised by permutations of {0..n}: s_i swaps positions i and i+1.
// Length is the inversion count.

#include <coxbip/word_engine.hpp>

#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<int> permutation_of(const coxbip::Word& w, std::size_t rank) {
  std::vector<int> p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  for (auto s : w) std::swap(p[s], p[s + 1]);
  return p;
}

inline std::size_t inversions(const std::vector<int>& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

}  // namespace oracle
