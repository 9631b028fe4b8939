#ifndef PLATONIC_FORMAT_HPP
#define PLATONIC_FORMAT_HPP

// Text renderings (table, JSON, CSV) of every result type. Integers that can
// grow without bound are written as decimal strings; small bounded fields
// (indices into tables, moduli, counts, coefficients) are JSON numbers.
// Field order is fixed, so identical inputs render byte-identically.

#include "platonic/identities.hpp"
#include "platonic/periodicity.hpp"
#include "platonic/pollock.hpp"
#include "platonic/representations.hpp"
#include "platonic/sequences.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace platonic {

enum class OutputFormat { Table, Json, Csv };

inline std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integers_json(std::span<const Integer> values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(v.str());
  return out;
}

inline std::string join(std::span<const Integer> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sequences

inline Json to_json(const Sequence& seq) {
  Json j;
  j["kind"] = name(seq.kind);
  j["start_index"] = seq.start_index;
  j["values"] = detail::integers_json(seq.values);
  return j;
}

inline std::string render(const Sequence& seq, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return to_json(seq).dump() + "\n";
    case OutputFormat::Csv: {
      std::string out = "kind,index,value\n";
      for (std::size_t j = 0; j < seq.values.size(); ++j) {
        out += std::string(name(seq.kind)) + "," +
               std::to_string(seq.start_index + j) + "," + seq.values[j].str() +
               "\n";
      }
      return out;
    }
    case OutputFormat::Table:
      break;
  }
  return std::string(1, symbol(seq.kind)) + "_n: " +
         detail::join(seq.values, ", ") + "\n";
}

// ---------------------------------------------------------------------------
// Difference tables

inline Json to_json(const DiffTable& table) {
  Json j;
  j["kind"] = name(table.kind);
  j["rows"] = table.rows;
  Json columns = Json::array();
  for (const auto& column : table.columns) {
    columns.push_back(detail::integers_json(column));
  }
  j["columns"] = std::move(columns);
  return j;
}

inline std::string render(const DiffTable& table, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(table).dump() + "\n";
  if (format == OutputFormat::Csv) {
    std::string out = "index,value,delta1,delta2,delta3,delta4\n";
    for (std::size_t r = 0; r < table.rows; ++r) {
      out += std::to_string(r + 1);
      for (const auto& column : table.columns) {
        out += ",";
        if (r < column.size()) out += column[r].str();
      }
      out += "\n";
    }
    return out;
  }
  const char s = symbol(table.kind);
  std::vector<std::string> header = {std::string(1, s) + "_n"};
  for (int k = 1; k < 5; ++k) {
    header.push_back("D" + (k > 1 ? std::to_string(k) : std::string()) + s + "_n");
  }
  std::vector<std::size_t> width(5, 0);
  for (std::size_t k = 0; k < 5; ++k) {
    width[k] = header[k].size();
    for (const Integer& v : table.columns[k]) {
      width[k] = std::max(width[k], v.str().size());
    }
  }
  std::string out;
  for (std::size_t k = 0; k < 5; ++k) {
    out += (k ? "  " : "") + detail::pad_left(header[k], width[k]);
  }
  out += "\n";
  for (std::size_t r = 0; r < table.rows; ++r) {
    std::string line;
    for (std::size_t k = 0; k < 5; ++k) {
      const auto& column = table.columns[k];
      line += (k ? "  " : "") +
              detail::pad_left(r < column.size() ? column[r].str() : "", width[k]);
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities

inline Json to_json(const IdentityCheck& c) {
  Json j;
  j["kind"] = name(c.kind);
  j["order"] = c.order;
  j["index"] = c.index.str();
  j["expected"] = c.expected.str();
  j["actual"] = c.actual.str();
  j["holds"] = c.holds;
  return j;
}

inline std::string render(std::span<const IdentityCheck> checks,
                          OutputFormat format) {
  std::string out;
  if (format == OutputFormat::Json) {
    for (const auto& c : checks) out += to_json(c).dump() + "\n";
    return out;
  }
  if (format == OutputFormat::Csv) {
    out = "kind,order,index,expected,actual,holds\n";
    for (const auto& c : checks) {
      out += std::string(name(c.kind)) + "," + std::to_string(c.order) + "," +
             c.index.str() + "," + c.expected.str() + "," + c.actual.str() + "," +
             (c.holds ? "true" : "false") + "\n";
    }
    return out;
  }
  out = "kind          order  index  expected  actual  holds\n";
  for (const auto& c : checks) {
    std::ostringstream line;
    line << std::string(name(c.kind)) + std::string(14 - name(c.kind).size(), ' ')
         << detail::pad_left(std::to_string(c.order), 5) << "  "
         << detail::pad_left(c.index.str(), 5) << "  "
         << detail::pad_left(c.expected.str(), 8) << "  "
         << detail::pad_left(c.actual.str(), 6) << "  "
         << (c.holds ? "yes" : "NO") << "\n";
    out += line.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representations

inline Json to_json(const Representation& r) {
  Json j;
  j["kind"] = name(r.kind);
  j["base_index"] = r.base_index.str();
  j["coefficients"] = r.coefficients;
  j["indices"] = detail::integers_json(r.indices());
  j["values"] = detail::integers_json(r.values());
  j["target"] = r.target.str();
  j["includes_index_zero"] = r.includes_index_zero();
  return j;
}

inline std::string render(const Representation& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump() + "\n";
  const auto indices = r.indices();
  const auto values = r.values();
  if (format == OutputFormat::Csv) {
    std::string out = "kind,target,coefficient,index,value\n";
    for (std::size_t j = 0; j < 4; ++j) {
      out += std::string(name(r.kind)) + "," + r.target.str() + "," +
             std::to_string(r.coefficients[j]) + "," + indices[j].str() + "," +
             values[j].str() + "\n";
    }
    return out;
  }
  const char s = symbol(r.kind);
  std::string symbolic;
  std::string numeric;
  for (std::size_t j = 0; j < 4; ++j) {
    const int c = r.coefficients[j];
    const int mag = c < 0 ? -c : c;
    std::string sign = j == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    symbolic += sign + (mag == 1 ? "" : std::to_string(mag)) + s + "_" +
                indices[j].str();
    numeric += sign + std::to_string(mag) + "*" + values[j].str();
  }
  return r.target.str() + " = " + symbolic + "\n" + r.target.str() + " = " +
         numeric + "\n";
}

// ---------------------------------------------------------------------------
// Periods

inline Json to_json(const PeriodReport& p) {
  Json j;
  j["kind"] = name(p.kind);
  j["d"] = p.modulus;
  j["closed_form"] = p.closed_form;
  j["empirical"] = p.empirical;
  j["agrees"] = p.agrees;
  return j;
}

inline std::string period_csv_header() {
  return "kind,d,closed_form,empirical,agrees\n";
}

inline std::string period_row(const PeriodReport& p, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(p).dump() + "\n";
  if (format == OutputFormat::Csv) {
    return std::string(name(p.kind)) + "," + std::to_string(p.modulus) + "," +
           std::to_string(p.closed_form) + "," + std::to_string(p.empirical) +
           "," + (p.agrees ? "true" : "false") + "\n";
  }
  std::ostringstream line;
  line << std::string(name(p.kind)) << std::string(14 - name(p.kind).size(), ' ')
       << detail::pad_left(std::to_string(p.modulus), 6) << "  "
       << detail::pad_left(std::to_string(p.closed_form), 11) << "  "
       << detail::pad_left(std::to_string(p.empirical), 9) << "  "
       << (p.agrees ? "yes" : "no") << "\n";
  return line.str();
}

inline std::string period_table_header() {
  return "kind               d  closed_form  empirical  agrees\n";
}

// ---------------------------------------------------------------------------
// Witnesses and scans

inline Json to_json(const Witness& w) {
  Json j;
  j["target"] = w.target.str();
  Json terms = Json::array();
  for (const PoolEntry& t : w.terms) {
    Json term;
    term["value"] = t.value.str();
    Json prov = Json::array();
    for (const Provenance& p : t.provenance) {
      prov.push_back(Json{{"kind", name(p.kind)}, {"index", p.index}});
    }
    term["provenance"] = std::move(prov);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline std::string witness_sum(const Witness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    out += (i ? "+" : "") + w.terms[i].value.str();
  }
  return out;
}

inline Json to_json(const ScanReport& report) {
  Json j;
  j["N"] = report.limit;
  j["max_terms"] = report.max_terms;
  j["policy"] = name(report.policy);
  Json histogram = Json::object();
  for (std::size_t k = 0; k < report.histogram.size(); ++k) {
    histogram[std::to_string(k + 1)] = report.histogram[k];
  }
  j["min_terms_histogram"] = std::move(histogram);
  j["failures"] = report.failures;
  if (report.witnesses) {
    Json witnesses = Json::array();
    for (const Witness& w : *report.witnesses) witnesses.push_back(to_json(w));
    j["witnesses"] = std::move(witnesses);
  }
  return j;
}

/// CSV columns: record,key,value. Histogram rows carry (terms, count),
/// failure rows (target, empty), witness rows (target, a+b+...).
inline std::string render(const ScanReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(report).dump() + "\n";
  std::string out;
  if (format == OutputFormat::Csv) {
    out = "record,key,value\n";
    for (std::size_t k = 0; k < report.histogram.size(); ++k) {
      out += "histogram," + std::to_string(k + 1) + "," +
             std::to_string(report.histogram[k]) + "\n";
    }
    for (std::uint64_t f : report.failures) {
      out += "failure," + std::to_string(f) + ",\n";
    }
    if (report.witnesses) {
      for (const Witness& w : *report.witnesses) {
        out += "witness," + w.target.str() + "," + witness_sum(w) + "\n";
      }
    }
    return out;
  }
  out = "N = " + std::to_string(report.limit) + ", at most " +
        std::to_string(report.max_terms) + " terms (" +
        std::string(name(report.policy)) + ")\n";
  for (std::size_t k = 0; k < report.histogram.size(); ++k) {
    out += "  " + std::to_string(k + 1) + " term" + (k ? "s" : " ") + ": " +
           std::to_string(report.histogram[k]) + "\n";
  }
  out += "  failures: " + std::to_string(report.failures.size()) + "\n";
  for (std::uint64_t f : report.failures) out += "    " + std::to_string(f) + "\n";
  if (report.witnesses) {
    for (const Witness& w : *report.witnesses) {
      out += w.target.str() + " = " + witness_sum(w) + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference tables

/// First ten values of each family followed by a ten-row difference table
/// per family. The output is compared against tests/golden/paper_tables.txt.
inline std::string reference_tables() {
  std::string out = "# Platonic numbers, n = 1..10\n";
  for (PlatonicKind kind : kAllKinds) {
    out += render(platonic_range(kind, 1, 10), OutputFormat::Table);
  }
  for (PlatonicKind kind : kAllKinds) {
    out += "\n# Forward differences: " + std::string(name(kind)) + "\n";
    out += render(difference_table(kind, 10), OutputFormat::Table);
  }
  return out;
}

}  // namespace platonic

#endif  // PLATONIC_FORMAT_HPP
