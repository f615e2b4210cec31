#pragma once

#include <coxbip/catalog.hpp>
#include <coxbip/coxeter_matrix.hpp>
#include <coxbip/word_engine.hpp>

#include <random>
#include <vector>

namespace fx {

using namespace coxbip;

inline CoxeterMatrix cat(std::string_view name) { return catalog_matrix(name); }

inline CoxeterMatrix dihedral(Label m) { return CoxeterMatrix(2, 2, {{0, 1, m}}); }

// Path diagram with the given consecutive labels; every other pair commutes.
inline CoxeterMatrix path(const std::vector<Label>& labels) {
  std::vector<LabelEntry> e;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 2) e.push_back({static_cast<Generator>(i), static_cast<Generator>(i + 1), labels[i]});
  }
  return CoxeterMatrix(labels.size() + 1, 2, e);
}

inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Generator> gen(0, static_cast<Generator>(rank - 1));
  Word w(len(rng));
  for (auto& s : w) s = gen(rng);
  return w;
}

// Random matrix with labels drawn from `choices` (kInfinity allowed).
inline CoxeterMatrix random_matrix(std::mt19937_64& rng, std::size_t rank, const std::vector<Label>& choices) {
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  std::vector<LabelEntry> e;
  for (Generator i = 0; i < rank; ++i)
    for (Generator j = i + 1; j < rank; ++j) {
      Label l = choices[pick(rng)];
      if (l != 2) e.push_back({i, j, l});
    }
  return CoxeterMatrix(rank, 2, e);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"finite-A2", "finite-B2",      "A3",   "dihedral-inf",
                                                 "affine-A2", "triangle-444",   "free-product-3",
                                                 "grid",      "A1xDinf",        "example-fig2"};
  return names;
}

}  // namespace fx
