#pragma once

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsea {

/// Minimal CSV emitter: one header row, then numeric rows formatted with
/// %.12g. Column count is checked against the header.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header)
      : out_(out), columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << '\n';
  }

  void row(std::initializer_list<double> values) {
    if (values.size() != columns_)
      throw std::logic_error("CsvWriter: wrong number of columns");
    bool first = true;
    char buf[32];
    for (const double v : values) {
      if (!first) out_ << ',';
      std::snprintf(buf, sizeof(buf), "%.12g", v);
      out_ << buf;
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  std::size_t columns_;
};

/// Opens an output file for CSV writing, failing loudly.
inline std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace nsea
