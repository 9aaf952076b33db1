#pragma once

// Exact counting of ordered words and permutation-equivalent multisets over a
// k-letter alphabet. All arithmetic is arbitrary precision; nothing in here
// touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgc {

using BigInt = boost::multiprecision::cpp_int;

/// Alphabet size k (>= 1) and word length r (>= 0).
struct CountParams {
  std::uint32_t k = 4;
  std::uint32_t r = 3;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Canonical unordered content of a word: letter occupancies plus the sorted
/// word. Letters are identified by their rank in the alphabet order.
class MultisetClass {
 public:
  MultisetClass() = default;

  /// Builds from an occupancy vector; its size is the alphabet size k.
  explicit MultisetClass(std::vector<std::uint32_t> counts);

  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  const std::vector<std::uint32_t>& canonical_word() const noexcept { return word_; }
  std::uint32_t alphabet_size() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(word_.size()); }

  /// Spells the canonical word using `alphabet[rank]` for each letter.
  std::string spell(std::string_view alphabet) const;
  /// Spells with the default letters: "ACGU" for k = 4, otherwise 'A', 'B', ...
  std::string spell() const;

  friend bool operator==(const MultisetClass&, const MultisetClass&) = default;
  friend auto operator<=>(const MultisetClass& a, const MultisetClass& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> word_;
};

/// Letters used by MultisetClass::spell() for an alphabet of size k. RNA order
/// A < C < G < U for k = 4, "AB..." for other k up to 26. Throws for k > 26.
std::string default_alphabet(std::uint32_t k);

/// k^r. By the empty-word convention r = 0 gives 1, including k = 0.
BigInt arrangements(CountParams p);

/// Number of multisets of size r over k letters, C(k + r - 1, r). Throws
/// InvalidParams for k = 0.
BigInt multiset_count(CountParams p);

/// Every multiset class in lexicographic order of the canonical word. Throws
/// CapacityExceeded when multiset_count(p) exceeds `cap`.
std::vector<MultisetClass> enumerate_multisets(CountParams p,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// Number of ordered words in the class: r! / prod(counts_i!).
BigInt class_size(const MultisetClass& c);

/// Canonical class of a word whose letters come from `alphabet` (ordered,
/// distinct, case-insensitive). Throws UnknownLetter.
MultisetClass canonicalize(std::string_view word, std::string_view alphabet = "ACGU");

/// Same as above for a word given as letter ranks in [0, k).
MultisetClass canonicalize(std::span<const std::uint32_t> word, std::uint32_t k);

BigInt binomial(std::uint32_t n, std::uint32_t k);
BigInt factorial(std::uint32_t n);

}  // namespace qgc
