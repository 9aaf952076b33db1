#include "qgc/codon.hpp"

#include "qgc/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <vector>

namespace qgc {

namespace {

constexpr std::array<Nucleotide, 4> kNcbiOrder = {Nucleotide::U, Nucleotide::C, Nucleotide::A,
                                                  Nucleotide::G};

constexpr std::string_view kStandardTable =
    "name   = Standard\n"
    "id     = 1\n"
    "AAs    = FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG\n"
    "Starts = ---M---------------M---------------M----------------------------\n"
    "Base1  = TTTTTTTTTTTTTTTTCCCCCCCCCCCCCCCCAAAAAAAAAAAAAAAAGGGGGGGGGGGGGGGG\n"
    "Base2  = TTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGG\n"
    "Base3  = TCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG\n";

char upper(char ch) { return static_cast<char>(std::toupper(static_cast<unsigned char>(ch))); }

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::string lower_copy(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char ch) { return static_cast<char>(std::tolower(static_cast<unsigned char>(ch))); });
  return out;
}

}  // namespace

Nucleotide nucleotide_from_char(char ch) {
  switch (upper(ch)) {
    case 'A': return Nucleotide::A;
    case 'C': return Nucleotide::C;
    case 'G': return Nucleotide::G;
    case 'T':
    case 'U': return Nucleotide::U;
    default: break;
  }
  throw Error(ErrorKind::UnknownLetter, std::string("unknown nucleotide '") + ch + "'");
}

char to_char(Nucleotide n) noexcept { return "ACGU"[static_cast<int>(n)]; }

char to_dna_char(Nucleotide n) noexcept { return "ACGT"[static_cast<int>(n)]; }

int ncbi_rank(Nucleotide n) noexcept {
  switch (n) {
    case Nucleotide::U: return 0;
    case Nucleotide::C: return 1;
    case Nucleotide::A: return 2;
    case Nucleotide::G: return 3;
  }
  return 0;
}

Codon Codon::from_ncbi_index(int index) {
  if (index < 0 || index >= kCount) {
    throw Error(ErrorKind::InvalidParams, "codon index " + std::to_string(index) + " outside 0..63");
  }
  return Codon(kNcbiOrder[static_cast<std::size_t>(index / 16)],
               kNcbiOrder[static_cast<std::size_t>((index / 4) % 4)],
               kNcbiOrder[static_cast<std::size_t>(index % 4)]);
}

Codon Codon::parse(std::string_view text) {
  if (text.size() != 3) {
    throw Error(ErrorKind::InvalidParams, "codon \"" + std::string(text) + "\" must have 3 bases");
  }
  return Codon(nucleotide_from_char(text[0]), nucleotide_from_char(text[1]), nucleotide_from_char(text[2]));
}

int Codon::ncbi_index() const noexcept {
  return 16 * ncbi_rank(bases_[0]) + 4 * ncbi_rank(bases_[1]) + ncbi_rank(bases_[2]);
}

std::string Codon::str() const { return {to_char(bases_[0]), to_char(bases_[1]), to_char(bases_[2])}; }

MultisetClass Codon::multiset_class() const {
  std::vector<std::uint32_t> counts(4, 0);
  for (auto b : bases_) ++counts[static_cast<std::size_t>(b)];
  return MultisetClass(std::move(counts));
}

// ---------------------------------------------------------------------------

bool AminoAcid::is_valid(char symbol) noexcept {
  const char u = upper(symbol);
  return u == kStopChar || (u != '\0' && kStandardLetters.find(u) != std::string_view::npos);
}

AminoAcid::AminoAcid(char symbol) : symbol_(upper(symbol)) {
  if (!is_valid(symbol)) {
    throw Error(ErrorKind::UnknownLetter, std::string("unknown amino-acid symbol '") + symbol + "'");
  }
}

const std::array<AminoAcid, 21>& AminoAcid::all() {
  static const auto symbols = [] {
    std::array<AminoAcid, 21> out{};
    for (std::size_t i = 0; i < kStandardLetters.size(); ++i) out[i] = AminoAcid(kStandardLetters[i]);
    out[20] = AminoAcid(kStopChar);
    return out;
  }();
  return symbols;
}

std::string AminoAcid::name() const { return is_stop() ? "Stop" : std::string(1, symbol_); }

// ---------------------------------------------------------------------------

GeneticCode::GeneticCode(std::string name, std::optional<int> id, const Mapping& by_ncbi_index,
                         std::optional<std::bitset<Codon::kCount>> starts)
    : name_(std::move(name)), id_(id), mapping_(by_ncbi_index), starts_(starts) {
  if (name_.empty()) throw Error(ErrorKind::InvalidParams, "genetic code name must not be empty");
  if (is_space(name_.front()) || is_space(name_.back()) ||
      name_.find_first_of("\r\n") != std::string::npos) {
    throw Error(ErrorKind::InvalidParams,
                "genetic code name must be a single line without surrounding whitespace");
  }
}

bool GeneticCode::is_start(const Codon& c) const noexcept {
  return starts_.has_value() && starts_->test(static_cast<std::size_t>(c.ncbi_index()));
}

// ---------------------------------------------------------------------------

namespace {

struct Field {
  std::size_t line = 0;
  std::size_t value_column = 0;  // 1-based column of the first value character
  std::string value;
};

void require_width(const Field& f, std::string_view key) {
  if (f.value.size() != Codon::kCount) {
    throw FormatError(f.line, f.value_column,
                      std::string(key) + " must have exactly 64 characters, found " +
                          std::to_string(f.value.size()));
  }
}

}  // namespace

GeneticCode parse_table(std::string_view text) {
  static const std::map<std::string, std::string> kKeys = {
      {"name", "name"},     {"id", "id"},         {"aas", "AAs"},       {"starts", "Starts"},
      {"base1", "Base1"}, {"base2", "Base2"}, {"base3", "Base3"}};

  std::map<std::string, Field> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto first = std::find_if_not(line.begin(), line.end(), is_space);
    if (first == line.end() || *first == '#') {
      if (end == text.size()) break;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError(line_no, static_cast<std::size_t>(first - line.begin()) + 1,
                        "expected 'key = value'");
    }
    const auto key_begin = static_cast<std::size_t>(first - line.begin());
    auto key_end = eq;
    while (key_end > key_begin && is_space(line[key_end - 1])) --key_end;
    const std::string key = lower_copy(line.substr(key_begin, key_end - key_begin));

    auto value_begin = eq + 1;
    while (value_begin < line.size() && is_space(line[value_begin])) ++value_begin;
    auto value_end = line.size();
    while (value_end > value_begin && is_space(line[value_end - 1])) --value_end;

    const auto known = kKeys.find(key);
    if (known == kKeys.end()) {
      throw FormatError(line_no, key_begin + 1,
                        "unknown key '" + std::string(line.substr(key_begin, key_end - key_begin)) + "'");
    }
    if (fields.count(key) != 0) {
      throw FormatError(line_no, key_begin + 1,
                        "duplicate key '" + known->second + "' (first seen on line " +
                            std::to_string(fields[key].line) + ")");
    }
    fields[key] = Field{line_no, value_begin + 1, std::string(line.substr(value_begin, value_end - value_begin))};

    if (end == text.size()) break;
  }

  for (const char* required : {"name", "aas", "base1", "base2", "base3"}) {
    if (fields.count(required) == 0) {
      throw FormatError(0, 0, "missing field '" + kKeys.at(required) + "'");
    }
  }
  if (fields["name"].value.empty()) {
    throw FormatError(fields["name"].line, fields["name"].value_column, "name must not be empty");
  }

  std::optional<int> id;
  if (auto it = fields.find("id"); it != fields.end()) {
    const auto& v = it->second.value;
    int parsed = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), parsed);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      throw FormatError(it->second.line, it->second.value_column, "id must be an integer, got '" + v + "'");
    }
    id = parsed;
  }

  const Field& aas = fields["aas"];
  require_width(aas, "AAs");
  std::array<const Field*, 3> base_fields = {&fields["base1"], &fields["base2"], &fields["base3"]};
  for (std::size_t b = 0; b < 3; ++b) require_width(*base_fields[b], "Base" + std::to_string(b + 1));

  const Field* starts_field = nullptr;
  if (auto it = fields.find("starts"); it != fields.end()) {
    starts_field = &it->second;
    require_width(*starts_field, "Starts");
  }

  GeneticCode::Mapping mapping{};
  std::bitset<Codon::kCount> starts;
  std::array<int, Codon::kCount> seen_in_column;
  seen_in_column.fill(-1);

  for (std::size_t col = 0; col < Codon::kCount; ++col) {
    std::array<Nucleotide, 3> bases{};
    for (std::size_t b = 0; b < 3; ++b) {
      const Field& f = *base_fields[b];
      try {
        bases[b] = nucleotide_from_char(f.value[col]);
      } catch (const Error&) {
        throw FormatError(f.line, f.value_column + col,
                          std::string("unknown nucleotide '") + f.value[col] + "' in Base" + std::to_string(b + 1));
      }
    }
    const Codon codon(bases[0], bases[1], bases[2]);
    const auto index = static_cast<std::size_t>(codon.ncbi_index());
    if (seen_in_column[index] >= 0) {
      throw FormatError(base_fields[0]->line, base_fields[0]->value_column + col,
                        "inconsistent base lines: codon " + codon.str() + " appears in columns " +
                            std::to_string(seen_in_column[index] + 1) + " and " + std::to_string(col + 1));
    }
    seen_in_column[index] = static_cast<int>(col);

    const char symbol = aas.value[col];
    if (!AminoAcid::is_valid(symbol)) {
      throw FormatError(aas.line, aas.value_column + col,
                        std::string("unknown amino-acid symbol '") + symbol + "'");
    }
    mapping[index] = AminoAcid(symbol);

    if (starts_field != nullptr) {
      const char mark = upper(starts_field->value[col]);
      if (mark == 'M') {
        starts.set(index);
      } else if (mark != '-' && mark != '*') {
        throw FormatError(starts_field->line, starts_field->value_column + col,
                          std::string("unknown start marker '") + starts_field->value[col] + "'");
      }
    }
  }

  std::optional<std::bitset<Codon::kCount>> start_set;
  if (starts_field != nullptr) start_set = starts;
  return GeneticCode(fields["name"].value, id, mapping, start_set);
}

std::string serialize_table(const GeneticCode& code) {
  std::string aas, starts, b1, b2, b3;
  for (int i = 0; i < Codon::kCount; ++i) {
    const Codon c = Codon::from_ncbi_index(i);
    aas.push_back(code.translate(c).symbol());
    starts.push_back(code.is_start(c) ? 'M' : '-');
    b1.push_back(to_dna_char(c[0]));
    b2.push_back(to_dna_char(c[1]));
    b3.push_back(to_dna_char(c[2]));
  }
  std::string out;
  auto line = [&out](std::string_view key, std::string_view value) {
    out.append(key);
    out.append(6 - key.size(), ' ');
    out.append(" = ");
    out.append(value);
    out.push_back('\n');
  };
  line("name", code.name());
  if (code.id()) line("id", std::to_string(*code.id()));
  line("AAs", aas);
  if (code.starts()) line("Starts", starts);
  line("Base1", b1);
  line("Base2", b2);
  line("Base3", b3);
  return out;
}

std::string_view standard_table_text() noexcept { return kStandardTable; }

const GeneticCode& builtin_standard_code() {
  static const GeneticCode code = parse_table(kStandardTable);
  return code;
}

const GeneticCode& builtin_code(std::string_view key) {
  const auto k = lower_copy(key);
  if (k == "standard" || k == "1") return builtin_standard_code();
  throw Error(ErrorKind::InvalidParams, "unknown built-in code '" + std::string(key) + "'");
}

std::string normalize_alphabet(std::string_view word, AlphabetDirection direction) {
  const std::string_view source = direction == AlphabetDirection::DnaToRna ? "ACGT" : "ACGU";
  std::string out;
  out.reserve(word.size());
  for (char ch : word) {
    const char u = upper(ch);
    if (source.find(u) == std::string_view::npos) {
      throw Error(ErrorKind::UnknownLetter,
                  std::string("unknown letter '") + ch + "' for alphabet " + std::string(source));
    }
    if (u == 'T') {
      out.push_back('U');
    } else if (u == 'U') {
      out.push_back('T');
    } else {
      out.push_back(u);
    }
  }
  return out;
}

}  // namespace qgc
