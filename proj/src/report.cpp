#include "qgc/report.hpp"

#include "qgc/error.hpp"
#include "qgc/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace qgc {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidParams, "unknown output format '" + std::string(name) + "'");
}

double round_sig(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

namespace {

Json num(double v) { return round_sig(v); }

std::string symbols(const std::vector<AminoAcid>& products) {
  std::string out;
  for (auto a : products) out.push_back(a.symbol());
  return out;
}

Json symbol_list(const auto& products) {
  Json out = Json::array();
  for (auto a : products) out.push_back(std::string(1, a.symbol()));
  return out;
}

// ----- text rendering --------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out.push_back(' ');
      out += scalar_text(e);
    }
    return out;
  }
  return v.dump();
}

bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void render_table(std::ostringstream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> headers;
  for (const auto& [key, _] : rows.front().items()) headers.push_back(key);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < headers.size(); ++c) {
      line.push_back(scalar_text(row.at(headers[c])));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - line[c].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  emit(headers);
  for (const auto& line : cells) emit(line);
}

void render_object(std::ostringstream& out, const Json& obj, const std::string& indent) {
  std::size_t key_width = 0;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_object() && !is_table(value)) key_width = std::max(key_width, key.size());
  }
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object() || is_table(value)) continue;
    out << indent << key << std::string(key_width - key.size() + 2, ' ') << scalar_text(value) << '\n';
  }
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << '\n' << indent << "[" << key << "]\n";
      render_object(out, value, indent + "  ");
    } else if (is_table(value)) {
      out << '\n' << indent << "[" << key << "]\n";
      render_table(out, value, indent + "  ");
    }
  }
}

// ----- csv rendering ---------------------------------------------------------

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void flatten(const Json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [key, value] : obj.items()) {
    const auto name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, rows);
    } else if (!is_table(value)) {
      rows.emplace_back(name, scalar_text(value));
    }
  }
}

const Json* primary_table(const Report& r) {
  if (r.kind == "count" && r.data.contains("classes")) return &r.data["classes"];
  if (r.kind == "analyze") return &r.data["symmetry"]["classes"];
  if (r.kind == "grover-simulate") return &r.data["trace"];
  return nullptr;
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  if (const Json* table = primary_table(r)) {
    std::vector<std::string> headers;
    for (const auto& [key, _] : table->front().items()) headers.push_back(key);
    for (std::size_t c = 0; c < headers.size(); ++c) out << (c ? "," : "") << csv_cell(headers[c]);
    out << '\n';
    for (const auto& row : *table) {
      for (std::size_t c = 0; c < headers.size(); ++c) {
        out << (c ? "," : "") << csv_cell(scalar_text(row.at(headers[c])));
      }
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(r.data, "", rows);
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << csv_cell(k) << ',' << csv_cell(v) << '\n';
  return out.str();
}

}  // namespace

// ----- report builders -------------------------------------------------------

Report count_report(CountParams p, std::uint64_t cap, bool enumerate) {
  Report r{"count", Json::object()};
  auto& d = r.data;
  d["report"] = r.kind;
  d["k"] = p.k;
  d["r"] = p.r;
  d["arrangements"] = arrangements(p).str();
  d["multiset_count"] = multiset_count(p).str();
  d["enumerated"] = enumerate;
  if (!enumerate) return r;

  const auto classes = enumerate_multisets(p, cap);
  const bool spellable = p.k <= 26;
  BigInt sum = 0;
  Json rows = Json::array();
  for (const auto& c : classes) {
    const auto size = class_size(c);
    sum += size;
    Json row = Json::object();
    if (spellable) {
      row["word"] = c.spell();
    } else {
      row["word"] = c.canonical_word();
    }
    row["counts"] = c.counts();
    row["class_size"] = size.str();
    rows.push_back(std::move(row));
  }
  d["class_count"] = classes.size();
  d["class_size_sum"] = sum.str();
  d["partition_identity_holds"] = (sum == arrangements(p));
  if (!rows.empty()) d["classes"] = std::move(rows);
  return r;
}

Report analyze_report(const GeneticCode& code) {
  Report r{"analyze", Json::object()};
  auto& d = r.data;
  d["report"] = r.kind;
  d["code"] = {{"name", code.name()}, {"id", code.id() ? Json(*code.id()) : Json(nullptr)}};

  const auto sym = partition_classes(code);
  Json classes = Json::array();
  for (const auto& c : sym.per_class) {
    Json codons = Json::array();
    for (const auto& codon : c.codons) codons.push_back(codon.str());
    classes.push_back({{"class", c.cls.spell()},
                       {"size", c.codons.size()},
                       {"codons", codons},
                       {"products", symbols(c.products)},
                       {"coherent", c.coherent},
                       {"coherent_excluding_stop", c.coherent_excluding_stop}});
  }
  d["symmetry"] = {{"class_count", sym.per_class.size()},
                   {"coherent_count", sym.coherent_count},
                   {"coherent_count_excluding_stop", sym.coherent_count_excluding_stop},
                   {"amino_image_size", sym.amino_image_size},
                   {"amino_image_size_including_stop", sym.amino_image_size_including_stop},
                   {"bijective_20_to_20", sym.bijective_20_to_20},
                   {"bijective_20_to_20_excluding_stop", sym.bijective_20_to_20_excluding_stop},
                   {"incoherence_pairs", sym.incoherence_pairs},
                   {"incoherence_pairs_excluding_stop", sym.incoherence_pairs_excluding_stop},
                   {"classes", classes}};

  const auto pre = prefix_significance(code);
  Json prefixes = Json::array();
  for (const auto& p : pre.per_prefix) {
    prefixes.push_back({{"prefix", std::string{to_char(p.prefix[0]), to_char(p.prefix[1])}},
                        {"products", symbols({p.products.begin(), p.products.end()})},
                        {"product_set", symbol_list(p.product_set)},
                        {"degenerate", p.degenerate},
                        {"degenerate_excluding_stop", p.degenerate_excluding_stop}});
  }
  d["prefix"] = {{"fully_degenerate_prefix_count", pre.fully_degenerate_prefix_count},
                 {"fully_degenerate_prefix_count_excluding_stop", pre.fully_degenerate_prefix_count_excluding_stop},
                 {"distinct_amino_count_actual", pre.distinct_amino_count_actual},
                 {"full_degeneracy_ceiling", pre.full_degeneracy_ceiling},
                 {"prefixes", prefixes}};

  const auto v = multiset_invariance_violation(code);
  d["violation"] = {{"incoherent_pairs", v.incoherent_pairs},
                    {"same_class_pairs", v.same_class_pairs},
                    {"fraction", num(v.fraction)},
                    {"incoherent_pairs_excluding_stop", v.incoherent_pairs_excluding_stop},
                    {"same_class_pairs_excluding_stop", v.same_class_pairs_excluding_stop},
                    {"fraction_excluding_stop", num(v.fraction_excluding_stop)},
                    {"multiset_invariant", v.invariant()},
                    {"multiset_invariant_excluding_stop", v.invariant_excluding_stop()}};
  return r;
}

Report grover_solve_n_report(std::int64_t q) {
  Report r{"grover-solve-n", Json::object()};
  const double n = solve_n(q);
  const auto nearest = std::max<std::int64_t>(2, std::llround(n));
  r.data["report"] = r.kind;
  r.data["q"] = q;
  r.data["n"] = num(n);
  r.data["nearest_integer_n"] = nearest;
  r.data["success_probability_at_nearest"] = num(success_probability(nearest, q));
  return r;
}

Report grover_solve_q_report(double n) {
  Report r{"grover-solve-q", Json::object()};
  const double q = solve_q(n);
  r.data["report"] = r.kind;
  r.data["n"] = num(n);
  r.data["q"] = num(q);
  r.data["q_floor"] = static_cast<std::int64_t>(std::floor(q + 1e-9));
  return r;
}

Report grover_simulate_report(std::int64_t n, std::int64_t q, std::int64_t marked, SimulationLimits limits) {
  const auto run = simulate(n, q, marked, limits);
  Report r{"grover-simulate", Json::object()};
  auto& d = r.data;
  const double closed = success_probability(n, q);
  d["report"] = r.kind;
  d["n"] = n;
  d["q"] = q;
  d["marked"] = marked;
  d["final_probability"] = num(run.final_probability());
  d["closed_form_probability"] = num(closed);
  d["abs_difference"] = num(std::abs(run.final_probability() - closed));
  d["max_norm_drift"] = num(run.max_norm_drift);
  Json trace = Json::array();
  for (std::size_t i = 0; i < run.marked_probability.size(); ++i) {
    trace.push_back({{"iteration", i},
                     {"marked_probability", num(run.marked_probability[i])},
                     {"closed_form", num(success_probability(n, static_cast<std::int64_t>(i)))}});
  }
  d["trace"] = std::move(trace);
  return r;
}

Report energy_report(const PhysicalParams& p, double scale_factor) {
  const auto cmp = scale_comparison(p, scale_factor);
  Report r{"energy", Json::object()};
  auto& d = r.data;
  d["report"] = r.kind;
  d["params"] = {{"hbar_erg_s", num(p.hbar)},
                 {"delta_x_cm", num(p.delta_x)},
                 {"mass_g", num(p.mass)},
                 {"hbond_energy_erg", num(p.hbond_energy)},
                 {"scale_factor", num(scale_factor)}};
  d["base"] = {{"delta_x_cm", num(p.delta_x)},
               {"delta_p_g_cm_s", num(cmp.momentum_base)},
               {"delta_p_kg_m_s", num(cmp.momentum_base * units::kSiMomentumPerCgs)},
               {"delta_e_erg", num(cmp.energy_base)},
               {"delta_e_j", num(cmp.energy_base * units::kJoulePerErg)},
               {"delta_e_ev", num(cmp.energy_base * units::kEvPerErg)},
               {"ratio_to_hbond", num(cmp.base_to_hbond)}};
  d["scaled"] = {{"delta_x_cm", num(p.delta_x * scale_factor)},
                 {"delta_p_g_cm_s", num(cmp.momentum_scaled)},
                 {"delta_p_kg_m_s", num(cmp.momentum_scaled * units::kSiMomentumPerCgs)},
                 {"delta_e_erg", num(cmp.energy_scaled)},
                 {"delta_e_j", num(cmp.energy_scaled * units::kJoulePerErg)},
                 {"delta_e_ev", num(cmp.energy_scaled * units::kEvPerErg)},
                 {"ratio_to_hbond", num(cmp.scaled_to_hbond)}};
  d["energy_ratio"] = num(cmp.energy_ratio);
  d["measured_energy_ratio"] = num(cmp.energy_scaled / cmp.energy_base);
  return r;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report.data.dump(2) + "\n";
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Text: {
      std::ostringstream out;
      render_object(out, report.data, "");
      return out.str();
    }
  }
  return {};
}

}  // namespace qgc
