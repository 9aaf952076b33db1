#include "qgc/symmetry.hpp"

#include "qgc/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace qgc {

namespace {

std::vector<Codon> all_codons_sorted() {
  std::vector<Codon> out;
  out.reserve(Codon::kCount);
  for (auto b1 : kNucleotides)
    for (auto b2 : kNucleotides)
      for (auto b3 : kNucleotides) out.emplace_back(b1, b2, b3);
  return out;
}

template <typename Pred>
bool all_equal_where(const std::vector<AminoAcid>& products, Pred keep) {
  const AminoAcid* first = nullptr;
  for (const auto& p : products) {
    if (!keep(p)) continue;
    if (first == nullptr) {
      first = &p;
    } else if (p != *first) {
      return false;
    }
  }
  return true;
}

bool keep_all(AminoAcid) { return true; }
bool keep_non_stop(AminoAcid a) { return !a.is_stop(); }

std::map<MultisetClass, std::vector<Codon>> group_by_class() {
  std::map<MultisetClass, std::vector<Codon>> groups;
  for (const auto& c : all_codons_sorted()) groups[c.multiset_class()].push_back(c);
  return groups;
}

}  // namespace

SymmetryReport partition_classes(const GeneticCode& code) {
  SymmetryReport report;
  std::set<AminoAcid> image;
  for (const auto& aa : code.mapping()) image.insert(aa);
  report.amino_image_size_including_stop = static_cast<int>(image.size());
  report.amino_image_size = static_cast<int>(image.size()) - static_cast<int>(image.count(AminoAcid::stop()));

  std::set<AminoAcid> class_products;
  std::set<AminoAcid> class_products_non_stop;
  bool every_class_has_non_stop = true;

  for (auto& [cls, codons] : group_by_class()) {
    ClassReport entry;
    entry.cls = cls;
    entry.codons = codons;
    for (const auto& c : codons) entry.products.push_back(code.translate(c));
    entry.coherent = all_equal_where(entry.products, keep_all);
    entry.coherent_excluding_stop = all_equal_where(entry.products, keep_non_stop);

    for (std::size_t i = 0; i < entry.products.size(); ++i) {
      for (std::size_t j = i + 1; j < entry.products.size(); ++j) {
        const auto a = entry.products[i];
        const auto b = entry.products[j];
        if (a == b) continue;
        ++report.incoherence_pairs;
        if (!a.is_stop() && !b.is_stop()) ++report.incoherence_pairs_excluding_stop;
      }
    }

    report.coherent_count += entry.coherent ? 1 : 0;
    report.coherent_count_excluding_stop += entry.coherent_excluding_stop ? 1 : 0;
    if (entry.coherent) class_products.insert(entry.products.front());
    const auto non_stop = std::find_if(entry.products.begin(), entry.products.end(), keep_non_stop);
    if (non_stop == entry.products.end()) {
      every_class_has_non_stop = false;
    } else if (entry.coherent_excluding_stop) {
      class_products_non_stop.insert(*non_stop);
    }
    report.per_class.push_back(std::move(entry));
  }

  const int classes = static_cast<int>(report.per_class.size());
  report.bijective_20_to_20 =
      report.coherent_count == classes && static_cast<int>(class_products.size()) == classes;
  report.bijective_20_to_20_excluding_stop = every_class_has_non_stop &&
                                              report.coherent_count_excluding_stop == classes &&
                                              static_cast<int>(class_products_non_stop.size()) == classes;
  return report;
}

PrefixReport prefix_significance(const GeneticCode& code) {
  PrefixReport report;
  std::set<AminoAcid> distinct;
  for (auto b1 : kNucleotides) {
    for (auto b2 : kNucleotides) {
      PrefixEntry entry;
      entry.prefix = {b1, b2};
      std::vector<AminoAcid> products;
      for (std::size_t i = 0; i < 4; ++i) {
        entry.products[i] = code.translate(Codon(b1, b2, kNucleotides[i]));
        products.push_back(entry.products[i]);
        entry.product_set.insert(entry.products[i]);
        if (!entry.products[i].is_stop()) distinct.insert(entry.products[i]);
      }
      entry.degenerate = all_equal_where(products, keep_all);
      entry.degenerate_excluding_stop = all_equal_where(products, keep_non_stop);
      report.fully_degenerate_prefix_count += entry.degenerate ? 1 : 0;
      report.fully_degenerate_prefix_count_excluding_stop += entry.degenerate_excluding_stop ? 1 : 0;
      report.per_prefix.push_back(std::move(entry));
    }
  }
  report.distinct_amino_count_actual = static_cast<int>(distinct.size());
  return report;
}

ViolationMetrics multiset_invariance_violation(const GeneticCode& code) {
  ViolationMetrics m;
  for (const auto& [cls, codons] : group_by_class()) {
    for (std::size_t i = 0; i < codons.size(); ++i) {
      for (std::size_t j = i + 1; j < codons.size(); ++j) {
        const auto a = code.translate(codons[i]);
        const auto b = code.translate(codons[j]);
        ++m.same_class_pairs;
        if (a != b) ++m.incoherent_pairs;
        if (a.is_stop() || b.is_stop()) continue;
        ++m.same_class_pairs_excluding_stop;
        if (a != b) ++m.incoherent_pairs_excluding_stop;
      }
    }
  }
  auto ratio = [](std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  m.fraction = ratio(m.incoherent_pairs, m.same_class_pairs);
  m.fraction_excluding_stop = ratio(m.incoherent_pairs_excluding_stop, m.same_class_pairs_excluding_stop);
  return m;
}

GeneticCode synthetic_code(std::uint64_t seed, SyntheticKind kind) {
  std::mt19937_64 rng(seed);
  const auto& symbols = AminoAcid::all();
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);

  GeneticCode::Mapping mapping{};
  const auto codons = all_codons_sorted();
  std::string label;

  switch (kind) {
    case SyntheticKind::Uniform:
      label = "uniform";
      for (const auto& c : codons) mapping[static_cast<std::size_t>(c.ncbi_index())] = symbols[pick(rng)];
      break;
    case SyntheticKind::MultisetInvariant:
    case SyntheticKind::Perturbed: {
      label = kind == SyntheticKind::Perturbed ? "perturbed" : "multiset-invariant";
      for (const auto& [cls, members] : group_by_class()) {
        const auto aa = symbols[pick(rng)];
        for (const auto& c : members) mapping[static_cast<std::size_t>(c.ncbi_index())] = aa;
      }
      if (kind == SyntheticKind::Perturbed) {
        std::uniform_int_distribution<int> how_many(1, 3);
        std::uniform_int_distribution<int> which(0, Codon::kCount - 1);
        for (int n = how_many(rng); n > 0; --n) {
          mapping[static_cast<std::size_t>(which(rng))] = symbols[pick(rng)];
        }
      }
      break;
    }
    case SyntheticKind::ThirdBaseDegenerate:
      label = "third-base-degenerate";
      for (auto b1 : kNucleotides) {
        for (auto b2 : kNucleotides) {
          const auto aa = symbols[pick(rng)];
          for (auto b3 : kNucleotides) mapping[static_cast<std::size_t>(Codon(b1, b2, b3).ncbi_index())] = aa;
        }
      }
      break;
  }

  std::bitset<Codon::kCount> starts;
  std::bernoulli_distribution start_coin(0.05);
  for (int i = 0; i < Codon::kCount; ++i) starts.set(static_cast<std::size_t>(i), start_coin(rng));

  return GeneticCode("Synthetic " + label + " seed " + std::to_string(seed), std::nullopt, mapping, starts);
}

}  // namespace qgc
