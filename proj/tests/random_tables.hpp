#pragma once

#include "qgc/codon.hpp"

#include <random>
#include <string>

namespace qgc::testing {

/// Random table with every optional field exercised: uniform symbols, id
/// present half the time, Starts line present two thirds of the time.
inline GeneticCode random_table(std::mt19937_64& rng, int serial) {
  const auto& symbols = AminoAcid::all();
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  GeneticCode::Mapping mapping{};
  for (auto& aa : mapping) aa = symbols[pick(rng)];
  std::optional<int> id;
  if (rng() % 2 == 0) id = static_cast<int>(rng() % 1000) - 100;
  std::optional<std::bitset<Codon::kCount>> starts;
  if (rng() % 3 != 0) starts = std::bitset<Codon::kCount>(rng());
  return GeneticCode("Random table " + std::to_string(serial), id, mapping, starts);
}

}  // namespace qgc::testing
