#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "asymcover/code_io.hpp"
#include "asymcover/cube.hpp"

namespace testing {

using namespace asymcover;

inline Code bits(int n, std::initializer_list<const char*> words, std::optional<int> r = std::nullopt) {
  std::vector<Codeword> v;
  for (const char* w : words) v.push_back(from_bitstring(w, n));
  return Code(n, v, r);
}

// Q_n x code double loop, no sweep.
inline bool naive_covers(const Code& code, int R) {
  for (Codeword y = 0; y < (Codeword{1} << code.n()); ++y) {
    bool hit = false;
    for (Codeword c : code)
      if (dominated(y, c) && weight(c) - weight(y) <= R) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

inline Code random_code(std::mt19937_64& gen, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Codeword> v;
  for (Codeword x = 0; x < (Codeword{1} << n); ++x)
    if (keep(gen)) v.push_back(x);
  return Code(n, v);
}

inline Code full_cube(int n) {
  std::vector<Codeword> v;
  for (Codeword x = 0; x < (Codeword{1} << n); ++x) v.push_back(x);
  return Code(n, v);
}

}  // namespace testing
