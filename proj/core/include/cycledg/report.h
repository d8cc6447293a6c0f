//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_REPORT_H_
#define CYCLEDG_REPORT_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cycledg/experiment.h"

namespace cycledg {
enum class ReportFormat { kCsv, kJsonLines };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Per-formulation summary over the records with status ok. "avg" and
/// "stdev" (sample) hold the measures themselves; "|best|" holds the number
/// of instances on which the formulation attained the minimum, with ties
/// credited to every tied formulation.
struct SummaryRow {
  std::string label;
  FormulationKind formulation = FormulationKind::kEdge;
  double mde = 0;
  double lde = 0;
  double cpu = 0;
};

std::vector<SummaryRow> summarize(const std::vector<BenchRecord> &records);

/// CSV: one header line, one line per record, then summary lines prefixed by
/// '#'. JSON lines: one object per record ("type": "record") and per summary
/// row ("type": "summary").
void write_report(const std::vector<BenchRecord> &records, ReportFormat format,
                  std::ostream &os);
void write_report_file(const std::vector<BenchRecord> &records,
                       ReportFormat format, const std::filesystem::path &path);

/// Reads the record lines of a CSV report; comment lines are skipped.
std::vector<BenchRecord> parse_report_csv(std::string_view text);

/// Fixed-width table with MDE, LDE and CPU columns per formulation, one row
/// per instance followed by the summary rows.
std::string format_table(const std::vector<BenchRecord> &records);
}  // namespace cycledg

#endif  // CYCLEDG_REPORT_H_
