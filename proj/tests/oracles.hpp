#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library's counting or canonicalization code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

namespace qgc::oracle {

/// Visits every word of length r over {0..k-1} (k^r of them).
inline void for_each_word(std::uint32_t k, std::uint32_t r,
                          const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (k == 0 && r > 0) return;
  std::vector<std::uint32_t> word(r, 0);
  while (true) {
    visit(word);
    std::size_t pos = 0;
    while (pos < r && ++word[pos] == k) word[pos++] = 0;
    if (pos == r) return;
  }
}

/// Sorted-word key -> number of ordered words with that content.
inline std::map<std::vector<std::uint32_t>, std::uint64_t> classes_by_sorting(std::uint32_t k, std::uint32_t r) {
  std::map<std::vector<std::uint32_t>, std::uint64_t> out;
  for_each_word(k, r, [&](const std::vector<std::uint32_t>& w) {
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    ++out[sorted];
  });
  return out;
}

inline std::uint64_t count_words(std::uint32_t k, std::uint32_t r) {
  std::uint64_t n = 0;
  for_each_word(k, r, [&](const std::vector<std::uint32_t>&) { ++n; });
  return n;
}

/// Distinct orderings of a word, by std::next_permutation.
inline std::uint64_t count_permutations(std::vector<std::uint32_t> word) {
  std::sort(word.begin(), word.end());
  std::uint64_t n = 0;
  do {
    ++n;
  } while (std::next_permutation(word.begin(), word.end()));
  return n;
}

// The standard code written out column by column (NCBI order, DNA letters).
inline constexpr std::string_view kAAs = "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG";
inline constexpr std::string_view kBase1 = "TTTTTTTTTTTTTTTTCCCCCCCCCCCCCCCCAAAAAAAAAAAAAAAAGGGGGGGGGGGGGGGG";
inline constexpr std::string_view kBase2 = "TTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGG";
inline constexpr std::string_view kBase3 = "TCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG";

/// Standard-code lookup by scanning the literal columns. Accepts RNA or DNA.
inline char standard_lookup(std::string_view codon) {
  auto dna = [](char c) { return c == 'U' ? 'T' : c; };
  for (std::size_t i = 0; i < kAAs.size(); ++i) {
    if (kBase1[i] == dna(codon[0]) && kBase2[i] == dna(codon[1]) && kBase3[i] == dna(codon[2])) return kAAs[i];
  }
  return '?';
}

}  // namespace qgc::oracle
