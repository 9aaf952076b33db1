#pragma once

// Nucleotides, codons, amino-acid symbols and genetic-code translation tables.
//
// Bases are held in RNA form. The enum order A < C < G < U is the canonical
// order used for multiset classes; table indices use the NCBI ordering where
// each position runs over T(U), C, A, G and the first base varies slowest.

#include "qgc/combinatorics.hpp"

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qgc {

enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, U = 3 };

inline constexpr std::array<Nucleotide, 4> kNucleotides = {Nucleotide::A, Nucleotide::C,
                                                           Nucleotide::G, Nucleotide::U};

/// Accepts A, C, G, T, U in either case; T maps to U. Throws UnknownLetter.
Nucleotide nucleotide_from_char(char ch);
char to_char(Nucleotide n) noexcept;
char to_dna_char(Nucleotide n) noexcept;

/// Position of the base in the NCBI T, C, A, G cycle.
int ncbi_rank(Nucleotide n) noexcept;

class Codon {
 public:
  static constexpr int kCount = 64;

  constexpr Codon() = default;
  constexpr Codon(Nucleotide b1, Nucleotide b2, Nucleotide b3) : bases_{b1, b2, b3} {}

  /// Inverse of ncbi_index(). Throws InvalidParams outside 0..63.
  static Codon from_ncbi_index(int index);
  /// Three letters, DNA or RNA, any case.
  static Codon parse(std::string_view text);

  const std::array<Nucleotide, 3>& bases() const noexcept { return bases_; }
  Nucleotide operator[](std::size_t i) const noexcept { return bases_[i]; }

  int ncbi_index() const noexcept;
  std::string str() const;
  MultisetClass multiset_class() const;

  friend constexpr bool operator==(const Codon&, const Codon&) = default;
  /// Lexicographic in canonical A < C < G < U order.
  friend constexpr auto operator<=>(const Codon&, const Codon&) = default;

 private:
  std::array<Nucleotide, 3> bases_{};
};

/// One-letter amino-acid symbol: one of the 20 standard IUPAC letters or the
/// stop symbol '*'.
class AminoAcid {
 public:
  static constexpr std::string_view kStandardLetters = "ACDEFGHIKLMNPQRSTVWY";
  static constexpr char kStopChar = '*';

  constexpr AminoAcid() = default;
  /// Case-insensitive. Throws UnknownLetter for anything outside the 21 symbols.
  explicit AminoAcid(char symbol);

  static AminoAcid stop() { return AminoAcid(kStopChar); }
  /// The 21 symbols: 20 amino acids in alphabetical order, then stop.
  static const std::array<AminoAcid, 21>& all();

  static bool is_valid(char symbol) noexcept;

  char symbol() const noexcept { return symbol_; }
  bool is_stop() const noexcept { return symbol_ == kStopChar; }
  /// "Stop" for the stop symbol, otherwise the letter.
  std::string name() const;

  friend constexpr bool operator==(AminoAcid, AminoAcid) = default;
  friend constexpr auto operator<=>(AminoAcid, AminoAcid) = default;

 private:
  char symbol_ = kStopChar;
};

/// Total map from the 64 codons to amino-acid symbols. Immutable once built.
class GeneticCode {
 public:
  using Mapping = std::array<AminoAcid, Codon::kCount>;

  GeneticCode(std::string name, std::optional<int> id, const Mapping& by_ncbi_index,
              std::optional<std::bitset<Codon::kCount>> starts = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::optional<int> id() const noexcept { return id_; }
  const Mapping& mapping() const noexcept { return mapping_; }
  const std::optional<std::bitset<Codon::kCount>>& starts() const noexcept { return starts_; }

  AminoAcid translate(const Codon& c) const noexcept { return mapping_[static_cast<std::size_t>(c.ncbi_index())]; }
  bool is_start(const Codon& c) const noexcept;

  friend bool operator==(const GeneticCode&, const GeneticCode&) = default;

 private:
  std::string name_;
  std::optional<int> id_;
  Mapping mapping_;
  std::optional<std::bitset<Codon::kCount>> starts_;
};

inline AminoAcid translate(const GeneticCode& code, const Codon& c) noexcept { return code.translate(c); }

/// Reads a `key = value` table. The mapping is taken column by column from
/// the AAs line against the Base1/Base2/Base3 lines, so any column order is
/// accepted. Throws FormatError carrying line/column.
GeneticCode parse_table(std::string_view text);

/// Writes the table in NCBI column order with DNA base letters.
std::string serialize_table(const GeneticCode& code);

/// Embedded NCBI translation table 1 in table-file format.
std::string_view standard_table_text() noexcept;

/// NCBI table 1, parsed from standard_table_text().
const GeneticCode& builtin_standard_code();

/// Looks up a built-in code by name ("standard") or NCBI id ("1").
/// Throws InvalidParams for anything else.
const GeneticCode& builtin_code(std::string_view key);

enum class AlphabetDirection { DnaToRna, RnaToDna };

/// Upper-cases and swaps T <-> U. Input must use the source alphabet
/// (ACGT for DnaToRna, ACGU for RnaToDna), case-insensitive.
std::string normalize_alphabet(std::string_view word, AlphabetDirection direction);

}  // namespace qgc
