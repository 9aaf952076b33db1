#include "qgc/combinatorics.hpp"

#include "qgc/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qgc {

MultisetClass::MultisetClass(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw Error(ErrorKind::InvalidParams, "multiset class needs an alphabet of size >= 1");
  }
  const auto r = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  word_.reserve(r);
  for (std::uint32_t letter = 0; letter < counts_.size(); ++letter) {
    word_.insert(word_.end(), counts_[letter], letter);
  }
}

std::string MultisetClass::spell(std::string_view alphabet) const {
  if (alphabet.size() < counts_.size()) {
    throw Error(ErrorKind::InvalidParams, "alphabet shorter than class alphabet size");
  }
  std::string out;
  out.reserve(word_.size());
  for (auto letter : word_) out.push_back(alphabet[letter]);
  return out;
}

std::string MultisetClass::spell() const { return spell(default_alphabet(alphabet_size())); }

std::string default_alphabet(std::uint32_t k) {
  if (k == 4) return "ACGU";
  if (k > 26) {
    throw Error(ErrorKind::InvalidParams, "no default letters for alphabet size " + std::to_string(k));
  }
  std::string out;
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(static_cast<char>('A' + i));
  return out;
}

BigInt factorial(std::uint32_t n) {
  BigInt out = 1;
  for (std::uint32_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  // Each partial product out * (n - i) / (i + 1) is itself a binomial, so the
  // division is exact.
  for (std::uint32_t i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

BigInt arrangements(CountParams p) {
  if (p.r == 0) return 1;
  if (p.k == 0) return 0;
  return boost::multiprecision::pow(BigInt(p.k), p.r);
}

BigInt multiset_count(CountParams p) {
  if (p.k == 0) throw Error(ErrorKind::InvalidParams, "multiset_count requires k >= 1");
  return binomial(p.k + p.r - 1, p.r);
}

std::vector<MultisetClass> enumerate_multisets(CountParams p, std::uint64_t cap) {
  const BigInt total = multiset_count(p);
  if (total > cap) {
    throw Error(ErrorKind::CapacityExceeded,
                "enumeration of " + total.str() + " classes exceeds cap " + std::to_string(cap));
  }
  std::vector<MultisetClass> out;
  out.reserve(total.convert_to<std::size_t>());

  // Odometer over non-decreasing words: bump the rightmost letter that can
  // still grow, then reset everything after it to that letter.
  std::vector<std::uint32_t> word(p.r, 0);
  std::vector<std::uint32_t> counts(p.k, 0);
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto letter : word) ++counts[letter];
    out.emplace_back(counts);

    std::size_t pos = word.size();
    while (pos > 0 && word[pos - 1] == p.k - 1) --pos;
    if (pos == 0) break;
    const auto next = word[pos - 1] + 1;
    std::fill(word.begin() + static_cast<std::ptrdiff_t>(pos - 1), word.end(), next);
  }
  return out;
}

BigInt class_size(const MultisetClass& c) {
  BigInt out = factorial(c.length());
  for (auto n : c.counts()) out /= factorial(n);
  return out;
}

MultisetClass canonicalize(std::span<const std::uint32_t> word, std::uint32_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidParams, "canonicalize requires k >= 1");
  std::vector<std::uint32_t> counts(k, 0);
  for (auto letter : word) {
    if (letter >= k) {
      throw Error(ErrorKind::UnknownLetter,
                  "letter rank " + std::to_string(letter) + " outside alphabet of size " + std::to_string(k));
    }
    ++counts[letter];
  }
  return MultisetClass(std::move(counts));
}

MultisetClass canonicalize(std::string_view word, std::string_view alphabet) {
  std::vector<std::uint32_t> ranks;
  ranks.reserve(word.size());
  for (char ch : word) {
    const auto upper = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    const auto pos = std::find_if(alphabet.begin(), alphabet.end(), [upper](char a) {
      return std::toupper(static_cast<unsigned char>(a)) == upper;
    });
    if (pos == alphabet.end()) {
      throw Error(ErrorKind::UnknownLetter,
                  std::string("unknown letter '") + ch + "' for alphabet \"" + std::string(alphabet) + "\"");
    }
    ranks.push_back(static_cast<std::uint32_t>(pos - alphabet.begin()));
  }
  return canonicalize(std::span<const std::uint32_t>(ranks), static_cast<std::uint32_t>(alphabet.size()));
}

}  // namespace qgc
