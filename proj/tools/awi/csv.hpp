#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace awi::cli {

// Locale-independent shortest-faithful rendering with 17 significant digits.
std::string format_real(double v);

struct ResultsRow {
  std::string system;
  std::string policy;
  std::string n_iter;  // expansion depth for awi rows, blank otherwise
  double beta = 0.0;
  int runs = 0;
  int horizon = 0;
  double mean_return = 0.0;
  double std_err = 0.0;
  std::uint64_t seed = 0;
};

std::string results_csv(const std::vector<ResultsRow>& rows);

struct IndexRow {
  double omega = 0.0;
  double value = 0.0;
  std::string kind;
};

std::string index_csv(const std::vector<IndexRow>& rows);

// Write via a sibling temp file + rename, so readers never see a torn file.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace awi::cli
