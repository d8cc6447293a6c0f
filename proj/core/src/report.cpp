//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cycledg {
std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv")
    return ReportFormat::kCsv;
  if (name == "json-lines")
    return ReportFormat::kJsonLines;
  return std::nullopt;
}

namespace {
  constexpr const char *kCsvHeader =
      "instance,m,n,formulation,mde,lde,objective,cpu_seconds,starts,seed,"
      "status,note";
  constexpr int kCsvFields = 12;

  std::vector<FormulationKind> kinds_present(
      const std::vector<BenchRecord> &records) {
    std::set<FormulationKind> kinds;
    for (const BenchRecord &r: records)
      kinds.insert(r.formulation);
    return { kinds.begin(), kinds.end() };
  }

  double sample_stdev(const std::vector<double> &v) {
    if (v.size() < 2)
      return 0;
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double ss = 0;
    for (double x: v)
      ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
  }

  double mean_of(const std::vector<double> &v) {
    return v.empty() ? std::nan("")
                     : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  }

  std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
      return s;
    std::string out = "\"";
    for (char c: s) {
      if (c == '"')
        out += '"';
      out += c;
    }
    out += '"';
    return out;
  }

  // Splits one CSV record starting at `pos`; advances `pos` past it.
  std::vector<std::string> split_csv_record(std::string_view text,
                                            std::size_t &pos) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    while (pos < text.size()) {
      char c = text[pos++];
      if (quoted) {
        if (c == '"') {
          if (pos < text.size() && text[pos] == '"') {
            fields.back() += '"';
            ++pos;
          } else {
            quoted = false;
          }
        } else {
          fields.back() += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.emplace_back();
      } else if (c == '\n') {
        break;
      } else if (c != '\r') {
        fields.back() += c;
      }
    }
    if (quoted)
      throw std::runtime_error("unterminated quoted CSV field");
    return fields;
  }

  template <class T>
  T parse_field(const std::string &s, const char *what) {
    T value {};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::runtime_error(std::string("malformed ") + what + " '" + s
                               + "'");
    return value;
  }

  nlohmann::json json_number(double x) {
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
  }
}  // namespace

std::vector<SummaryRow> summarize(const std::vector<BenchRecord> &records) {
  const std::vector<FormulationKind> kinds = kinds_present(records);

  std::map<FormulationKind, std::vector<double>> mde, lde, cpu;
  std::map<std::string, std::vector<const BenchRecord *>> by_instance;
  for (const BenchRecord &r: records) {
    if (r.status != RecordStatus::kOk)
      continue;
    mde[r.formulation].push_back(r.mde);
    lde[r.formulation].push_back(r.lde);
    cpu[r.formulation].push_back(r.cpu_seconds);
    by_instance[r.instance].push_back(&r);
  }

  std::map<FormulationKind, SummaryRow> best;
  for (FormulationKind k: kinds)
    best[k] = { "|best|", k, 0, 0, 0 };
  for (const auto &[name, recs]: by_instance) {
    auto credit = [&](auto measure, double SummaryRow::*field) {
      double lo = measure(*recs.front());
      for (const BenchRecord *r: recs)
        lo = std::min(lo, measure(*r));
      for (const BenchRecord *r: recs) {
        if (measure(*r) == lo)  // NOLINT(clang-diagnostic-float-equal)
          best[r->formulation].*field += 1;
      }
    };
    credit([](const BenchRecord &r) { return r.mde; }, &SummaryRow::mde);
    credit([](const BenchRecord &r) { return r.lde; }, &SummaryRow::lde);
    credit([](const BenchRecord &r) { return r.cpu_seconds; },
           &SummaryRow::cpu);
  }

  std::vector<SummaryRow> rows;
  for (FormulationKind k: kinds) {
    rows.push_back({ "avg", k, mean_of(mde[k]), mean_of(lde[k]),
                     mean_of(cpu[k]) });
  }
  for (FormulationKind k: kinds) {
    rows.push_back({ "stdev", k, sample_stdev(mde[k]), sample_stdev(lde[k]),
                     sample_stdev(cpu[k]) });
  }
  for (FormulationKind k: kinds)
    rows.push_back(best[k]);
  return rows;
}

void write_report(const std::vector<BenchRecord> &records, ReportFormat format,
                  std::ostream &os) {
  if (format == ReportFormat::kCsv) {
    os << kCsvHeader << '\n';
    for (const BenchRecord &r: records) {
      os << csv_field(r.instance) << ',' << r.m << ',' << r.n << ','
         << kind_name(r.formulation) << ',' << format_double(r.mde) << ','
         << format_double(r.lde) << ',' << format_double(r.objective) << ','
         << format_double(r.cpu_seconds) << ',' << r.starts_used << ','
         << r.seed << ',' << record_status_name(r.status) << ','
         << csv_field(r.note) << '\n';
    }
    for (const SummaryRow &s: summarize(records)) {
      os << "# " << s.label << ',' << kind_name(s.formulation) << ','
         << format_double(s.mde) << ',' << format_double(s.lde) << ','
         << format_double(s.cpu) << '\n';
    }
    return;
  }

  for (const BenchRecord &r: records) {
    nlohmann::json j {
      { "type", "record" },
      { "instance", r.instance },
      { "m", r.m },
      { "n", r.n },
      { "formulation", kind_name(r.formulation) },
      { "mde", json_number(r.mde) },
      { "lde", json_number(r.lde) },
      { "objective", json_number(r.objective) },
      { "cpu_seconds", json_number(r.cpu_seconds) },
      { "starts", r.starts_used },
      { "seed", r.seed },
      { "status", record_status_name(r.status) },
      { "note", r.note },
    };
    os << j.dump() << '\n';
  }
  for (const SummaryRow &s: summarize(records)) {
    nlohmann::json j {
      { "type", "summary" },
      { "label", s.label },
      { "formulation", kind_name(s.formulation) },
      { "mde", json_number(s.mde) },
      { "lde", json_number(s.lde) },
      { "cpu_seconds", json_number(s.cpu) },
    };
    os << j.dump() << '\n';
  }
}

void write_report_file(const std::vector<BenchRecord> &records,
                       ReportFormat format, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  write_report(records, format, out);
  out.flush();
  if (!out)
    throw std::runtime_error("write failed: " + path.string());
}

std::vector<BenchRecord> parse_report_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    if (text[pos] == '#' || text[pos] == '\n') {
      std::size_t nl = text.find('\n', pos);
      pos = nl == std::string_view::npos ? text.size() : nl + 1;
      continue;
    }

    std::vector<std::string> f = split_csv_record(text, pos);
    if (header) {
      header = false;
      continue;
    }
    if (static_cast<int>(f.size()) != kCsvFields)
      throw std::runtime_error("CSV record has " + std::to_string(f.size())
                               + " fields, expected "
                               + std::to_string(kCsvFields));

    BenchRecord r;
    r.instance = f[0];
    r.m = parse_field<int>(f[1], "m");
    r.n = parse_field<int>(f[2], "n");
    auto kind = parse_kind(f[3]);
    if (!kind)
      throw std::runtime_error("unknown formulation '" + f[3] + "'");
    r.formulation = *kind;
    r.mde = parse_field<double>(f[4], "mde");
    r.lde = parse_field<double>(f[5], "lde");
    r.objective = parse_field<double>(f[6], "objective");
    r.cpu_seconds = parse_field<double>(f[7], "cpu_seconds");
    r.starts_used = parse_field<int>(f[8], "starts");
    r.seed = parse_field<std::uint64_t>(f[9], "seed");
    auto status = parse_record_status(f[10]);
    if (!status)
      throw std::runtime_error("unknown status '" + f[10] + "'");
    r.status = *status;
    r.note = f[11];
    records.push_back(std::move(r));
  }
  return records;
}

std::string format_table(const std::vector<BenchRecord> &records) {
  const std::vector<FormulationKind> kinds = kinds_present(records);
  std::ostringstream os;
  char buf[64];

  os << "instance              m      n ";
  for (const char *measure: { "MDE", "LDE", "CPU" }) {
    for (FormulationKind k: kinds) {
      std::snprintf(buf, sizeof(buf), " | %s %-6s", measure,
                    std::string(kind_name(k)).c_str());
      os << buf;
    }
  }
  os << '\n';

  std::map<std::string, std::map<FormulationKind, const BenchRecord *>> rows;
  std::vector<std::string> order;
  for (const BenchRecord &r: records) {
    if (rows.find(r.instance) == rows.end())
      order.push_back(r.instance);
    rows[r.instance][r.formulation] = &r;
  }

  auto cell = [&](const BenchRecord *r, double BenchRecord::*field) {
    if (r == nullptr || r->status != RecordStatus::kOk)
      std::snprintf(buf, sizeof(buf), " | %10s", "-");
    else
      std::snprintf(buf, sizeof(buf), " | %10.3f", r->*field);
    return std::string(buf);
  };

  for (const std::string &name: order) {
    const auto &row = rows[name];
    const BenchRecord *any = row.begin()->second;
    std::snprintf(buf, sizeof(buf), "%-18s %6d %6d ", name.c_str(), any->m,
                  any->n);
    os << buf;
    for (double BenchRecord::*field:
         { &BenchRecord::mde, &BenchRecord::lde, &BenchRecord::cpu_seconds }) {
      for (FormulationKind k: kinds) {
        auto it = row.find(k);
        os << cell(it == row.end() ? nullptr : it->second, field);
      }
    }
    os << '\n';
  }

  std::map<std::string, std::map<FormulationKind, SummaryRow>> summary;
  for (const SummaryRow &s: summarize(records))
    summary[s.label][s.formulation] = s;
  for (const char *label: { "avg", "stdev", "|best|" }) {
    std::snprintf(buf, sizeof(buf), "%-32s", label);
    os << buf;
    for (double SummaryRow::*field:
         { &SummaryRow::mde, &SummaryRow::lde, &SummaryRow::cpu }) {
      for (FormulationKind k: kinds) {
        std::snprintf(buf, sizeof(buf), " | %10.3f",
                      summary[label][k].*field);
        os << buf;
      }
    }
    os << '\n';
  }
  return os.str();
}
}  // namespace cycledg
