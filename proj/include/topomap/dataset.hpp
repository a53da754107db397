#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/io_util.hpp"
#include "topomap/labels.hpp"
#include "topomap/types.hpp"

namespace topomap {

// One generated pattern: identity, ground truth, the generator parameters it
// came from (free text, commas excluded by construction), and its signature.
struct DatasetRecord {
  int pattern_id = 0;
  FineLabel fine_label = FineLabel::kReg3;
  std::string gen_params;
  std::vector<double> signature;  // descending eigenvalues
};

struct Dataset {
  int n = 0;  // signature dimension = node count of the source graphs
  std::vector<DatasetRecord> records;

  DataMatrix signatures() const {
    DataMatrix x;
    x.reserve(records.size());
    for (const auto& r : records) x.push_back(r.signature);
    return x;
  }

  std::vector<FineLabel> labels() const {
    std::vector<FineLabel> y;
    y.reserve(records.size());
    for (const auto& r : records) y.push_back(r.fine_label);
    return y;
  }
};

// Signatures of adjacency matrices are traceless, so their entries must sum
// to ~0; the reader enforces that along with the descending order.
inline constexpr double kSignatureSumTolerance = 1e-6;

inline std::string dataset_csv_header(int n) {
  std::string header = "pattern_id,fine_label,gen_params";
  char buf[16];
  for (int i = 1; i <= n; ++i) {
    std::snprintf(buf, sizeof buf, ",eig_%03d", i);
    header += buf;
  }
  return header;
}

// Values are written in shortest round-trip form, so reading the file back
// reproduces every double bit for bit and re-serializing is byte-identical.
inline void write_dataset_csv(const std::filesystem::path& path, const Dataset& ds) {
  if (ds.n < 1) throw PreconditionError("dataset dimension must be positive");
  std::string out = dataset_csv_header(ds.n);
  out += '\n';
  for (const auto& r : ds.records) {
    if (static_cast<int>(r.signature.size()) != ds.n)
      throw DimensionMismatch("record " + std::to_string(r.pattern_id) + " has " +
                              std::to_string(r.signature.size()) + " eigenvalues, expected " +
                              std::to_string(ds.n));
    out += std::to_string(r.pattern_id);
    out += ',';
    out += to_string(r.fine_label);
    out += ',';
    out += r.gen_params;
    for (double v : r.signature) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

inline Dataset read_dataset_csv(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto lines = split_lines(text);
  const std::string name = path.string();
  if (lines.empty()) throw ParseError(name, 1, "missing header");

  const auto head = split(lines[0], ',');
  if (head.size() < 4) throw ParseError(name, 1, "header has too few columns");
  const int n = static_cast<int>(head.size()) - 3;
  if (lines[0] != dataset_csv_header(n))
    throw ParseError(name, 1, "header does not match the expected column layout");

  Dataset ds;
  ds.n = n;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (lines[li].empty()) continue;
    const auto cells = split(lines[li], ',');
    if (static_cast<int>(cells.size()) != n + 3)
      throw ParseError(name, line_no,
                       "expected " + std::to_string(n + 3) + " columns, got " +
                           std::to_string(cells.size()));
    DatasetRecord rec;
    long long id = 0;
    if (!parse_int(cells[0], id) || id < 0)
      throw ParseError(name, line_no, "bad pattern_id '" + std::string(cells[0]) + "'");
    rec.pattern_id = static_cast<int>(id);
    const auto label = parse_fine_label(cells[1]);
    if (!label) throw ParseError(name, line_no, "unknown fine_label '" + std::string(cells[1]) + "'");
    rec.fine_label = *label;
    rec.gen_params = std::string(cells[2]);
    rec.signature.reserve(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int c = 0; c < n; ++c) {
      double v = 0.0;
      if (!parse_double(cells[static_cast<std::size_t>(c) + 3], v))
        throw ParseError(name, line_no,
                         "bad eigenvalue '" + std::string(cells[static_cast<std::size_t>(c) + 3]) + "'");
      if (!std::isfinite(v)) throw ParseError(name, line_no, "non-finite eigenvalue");
      if (c > 0 && v > rec.signature.back())
        throw ParseError(name, line_no, "signature is not sorted in descending order");
      rec.signature.push_back(v);
      sum += v;
    }
    if (std::abs(sum) > kSignatureSumTolerance)
      throw ParseError(name, line_no, "signature sum " + format_double(sum) +
                                          " violates the zero-trace invariant");
    ds.records.push_back(std::move(rec));
  }
  if (ds.records.empty()) throw ParseError(name, lines.size(), "dataset has no records");
  return ds;
}

}  // namespace topomap
