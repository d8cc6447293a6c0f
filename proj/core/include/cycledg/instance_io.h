//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_INSTANCE_IO_H_
#define CYCLEDG_INSTANCE_IO_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "cycledg/graph.h"

namespace cycledg {
/// n x K matrix, row i is the position of vertex i.
using Realization = Eigen::MatrixXd;

struct Instance {
  WeightedGraph graph;
  std::optional<Realization> realization;
};

class ParseError: public std::runtime_error {
public:
  ParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) { }

  int line() const { return line_; }

private:
  int line_;
};

/// Plain-text format:
///
///   # comment
///   n m K
///   u v d            (m lines, 1-based vertex ids)
///   realization      (optional)
///   x_1 ... x_K      (n lines)
Instance parse_instance(std::string_view text);

/// Writes the same format; numbers use the shortest round-trip form.
std::string write_instance(const Instance &inst);

Instance read_instance_file(const std::filesystem::path &path);
void write_instance_file(const std::filesystem::path &path,
                         const Instance &inst);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);
}  // namespace cycledg

#endif  // CYCLEDG_INSTANCE_IO_H_
