#pragma once

// Permutation-class analysis of a genetic code: how the 64 codons fall into
// the 20 multiset classes, how coherently each class translates, and how much
// the third base matters.
//
// Every metric comes in two conventions. "with stop" treats Stop as a 21st
// symbol; "excluding stop" drops stop-translated codons before comparing.

#include "qgc/codon.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace qgc {

struct ClassReport {
  MultisetClass cls;
  std::vector<Codon> codons;       // ascending A < C < G < U
  std::vector<AminoAcid> products; // products[i] = translate(codons[i])
  bool coherent = false;                // all products equal
  bool coherent_excluding_stop = false; // all non-stop products equal (vacuous if none)

  std::set<AminoAcid> product_set() const { return {products.begin(), products.end()}; }
};

struct SymmetryReport {
  std::vector<ClassReport> per_class;  // 20 entries, ascending canonical word

  int coherent_count = 0;
  int coherent_count_excluding_stop = 0;
  int amino_image_size = 0;               // distinct amino acids, Stop not counted
  int amino_image_size_including_stop = 0;

  // Every class coherent and the 20 class products pairwise distinct.
  bool bijective_20_to_20 = false;
  // Same with stop codons dropped; a class translating only to Stop fails.
  bool bijective_20_to_20_excluding_stop = false;

  std::uint64_t incoherence_pairs = 0;
  std::uint64_t incoherence_pairs_excluding_stop = 0;
};

struct PrefixEntry {
  std::array<Nucleotide, 2> prefix{};
  std::array<AminoAcid, 4> products{};  // third base A, C, G, U
  std::set<AminoAcid> product_set;
  bool degenerate = false;                // one product for all four
  bool degenerate_excluding_stop = false; // one non-stop product (vacuous if none)
};

struct PrefixReport {
  std::vector<PrefixEntry> per_prefix;  // 16 entries, ascending prefix
  int fully_degenerate_prefix_count = 0;
  int fully_degenerate_prefix_count_excluding_stop = 0;
  int distinct_amino_count_actual = 0;  // Stop not counted
  // Distinct-product ceiling if the third base carried no information: 4^2.
  int full_degeneracy_ceiling = 16;
};

struct ViolationMetrics {
  std::uint64_t incoherent_pairs = 0;
  std::uint64_t same_class_pairs = 0;
  double fraction = 0.0;

  // Pairs where neither codon translates to Stop.
  std::uint64_t incoherent_pairs_excluding_stop = 0;
  std::uint64_t same_class_pairs_excluding_stop = 0;
  double fraction_excluding_stop = 0.0;

  bool invariant() const noexcept { return incoherent_pairs == 0; }
  bool invariant_excluding_stop() const noexcept { return incoherent_pairs_excluding_stop == 0; }
};

SymmetryReport partition_classes(const GeneticCode& code);
PrefixReport prefix_significance(const GeneticCode& code);
ViolationMetrics multiset_invariance_violation(const GeneticCode& code);

enum class SyntheticKind {
  Uniform,           // each codon gets an independent uniform symbol
  MultisetInvariant, // one symbol per multiset class
  Perturbed,         // multiset-invariant, then a few codons reassigned
  ThirdBaseDegenerate, // one symbol per two-base prefix
};

/// Deterministic pseudo-random code for the given seed. Symbols are drawn
/// from the 21-symbol set.
GeneticCode synthetic_code(std::uint64_t seed, SyntheticKind kind);

}  // namespace qgc
