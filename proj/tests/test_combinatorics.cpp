#include "oracles.hpp"

#include "qgc/combinatorics.hpp"
#include "qgc/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using qgc::BigInt;
using qgc::CountParams;

TEST_CASE("arrangements") {
  CHECK(qgc::arrangements({4, 3}) == 64);
  CHECK(qgc::arrangements({7, 0}) == 1);
  CHECK(qgc::arrangements({2, 3}) == qgc::oracle::count_words(2, 3));
  CHECK(qgc::arrangements({2, 3}) == 8);

  SUBCASE("empty-word convention") {
    CHECK(qgc::arrangements({0, 0}) == 1);
    CHECK(qgc::arrangements({0, 5}) == 0);
  }
  SUBCASE("exact at the top of the supported range") {
    CHECK(qgc::arrangements({64, 64}) == (BigInt(1) << 384));
    CHECK(qgc::arrangements({2, 64}) == (BigInt(1) << 64));
  }
}

TEST_CASE("multiset_count") {
  CHECK(qgc::multiset_count({4, 3}) == 20);
  CHECK(qgc::multiset_count({1, 5}) == 1);
  CHECK(qgc::multiset_count({6, 3}) == qgc::oracle::classes_by_sorting(6, 3).size());
  CHECK(qgc::multiset_count({6, 3}) == 56);
  CHECK(qgc::multiset_count({5, 0}) == 1);
  CHECK_THROWS_AS(qgc::multiset_count({0, 3}), qgc::Error);

  // C(127, 64), far past 64 bits; value from Python math.comb.
  CHECK(qgc::multiset_count({64, 64}).str() == "11975573020964041433067793888190275875");

  SUBCASE("C(k+r-1, r) = C(k+r-1, k-1) symmetry") {
    for (std::uint32_t k = 1; k <= 10; ++k) {
      for (std::uint32_t r = 0; r <= 10; ++r) {
        CAPTURE(k);
        CAPTURE(r);
        CHECK(qgc::multiset_count({k, r}) == qgc::multiset_count({r + 1, k - 1}));
      }
    }
  }
}

TEST_CASE("enumerate_multisets small cases") {
  auto spelled = [](CountParams p) {
    std::vector<std::string> out;
    for (const auto& c : qgc::enumerate_multisets(p)) out.push_back(c.spell());
    return out;
  };
  CHECK(spelled({2, 2}) == std::vector<std::string>{"AA", "AB", "BB"});
  CHECK(spelled({3, 2}) == std::vector<std::string>{"AA", "AB", "AC", "BB", "BC", "CC"});
  CHECK(spelled({4, 3}).size() == 20);
  CHECK(spelled({4, 3}).front() == "AAA");
  CHECK(spelled({4, 3}).back() == "UUU");
  CHECK(spelled({3, 0}) == std::vector<std::string>{""});
}

TEST_CASE("enumerate_multisets matches brute force on the k, r <= 6 grid") {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    for (std::uint32_t r = 0; r <= 6; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      const auto classes = qgc::enumerate_multisets({k, r});
      const auto brute = qgc::oracle::classes_by_sorting(k, r);
      REQUIRE(classes.size() == brute.size());
      CHECK(qgc::multiset_count({k, r}) == classes.size());

      // std::map iterates keys in lexicographic order, which is the
      // enumeration order.
      auto it = brute.begin();
      BigInt total = 0;
      for (const auto& c : classes) {
        CHECK(c.canonical_word() == it->first);
        CHECK(qgc::class_size(c) == it->second);
        total += qgc::class_size(c);
        ++it;
      }
      CHECK(total == qgc::arrangements({k, r}));
      CHECK(std::adjacent_find(classes.begin(), classes.end()) == classes.end());
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_NOTHROW(qgc::enumerate_multisets({4, 3}, 20));
  try {
    qgc::enumerate_multisets({4, 3}, 19);
    FAIL("expected capacity-exceeded");
  } catch (const qgc::Error& e) {
    CHECK(e.kind() == qgc::ErrorKind::CapacityExceeded);
  }
  CHECK_THROWS_AS(qgc::enumerate_multisets({30, 30}), qgc::Error);
}

TEST_CASE("class_size") {
  CHECK(qgc::class_size(qgc::MultisetClass({3, 0, 0, 0})) == 1);
  CHECK(qgc::class_size(qgc::MultisetClass({2, 1, 0, 0})) == qgc::oracle::count_permutations({0, 0, 1}));
  CHECK(qgc::class_size(qgc::MultisetClass({2, 1, 0, 0})) == 3);
  CHECK(qgc::class_size(qgc::MultisetClass({1, 1, 1, 0})) == qgc::oracle::count_permutations({0, 1, 2}));
  CHECK(qgc::class_size(qgc::MultisetClass({1, 1, 1, 0})) == 6);
  CHECK(qgc::class_size(qgc::MultisetClass({0, 0})) == 1);
}

TEST_CASE("canonicalize") {
  CHECK(qgc::canonicalize("GAU").spell() == "AGU");
  CHECK(qgc::canonicalize("gau").spell() == "AGU");
  CHECK(qgc::canonicalize("AAA").spell() == "AAA");
  CHECK(qgc::canonicalize("GAU").counts() == std::vector<std::uint32_t>{1, 0, 1, 1});

  SUBCASE("every permutation of every codon lands in one class") {
    const std::string letters = "ACGU";
    qgc::oracle::for_each_word(4, 3, [&](const std::vector<std::uint32_t>& w) {
      std::string word{letters[w[0]], letters[w[1]], letters[w[2]]};
      const auto cls = qgc::canonicalize(word);
      CHECK(qgc::canonicalize(cls.spell()) == cls);
      std::string perm = word;
      std::sort(perm.begin(), perm.end());
      int seen = 0;
      do {
        CHECK(qgc::canonicalize(perm) == cls);
        ++seen;
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(seen == qgc::class_size(cls));
    });
  }

  SUBCASE("custom alphabet order") {
    CHECK(qgc::canonicalize("CBA", "CBA").spell("CBA") == "CBA");
    CHECK(qgc::canonicalize("ABC", "CBA").canonical_word() == std::vector<std::uint32_t>{0, 1, 2});
  }

  SUBCASE("unknown letter") {
    try {
      qgc::canonicalize("AXG");
      FAIL("expected unknown-letter");
    } catch (const qgc::Error& e) {
      CHECK(e.kind() == qgc::ErrorKind::UnknownLetter);
    }
    const std::vector<std::uint32_t> ranks{0, 4};
    CHECK_THROWS_AS(qgc::canonicalize(std::span<const std::uint32_t>(ranks), 4), qgc::Error);
  }
}

TEST_CASE("default alphabet") {
  CHECK(qgc::default_alphabet(4) == "ACGU");
  CHECK(qgc::default_alphabet(3) == "ABC");
  CHECK_THROWS_AS(qgc::default_alphabet(27), qgc::Error);
}
