#include "awi/csv.hpp"

#include <unistd.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace awi::cli {

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string results_csv(const std::vector<ResultsRow>& rows) {
  std::ostringstream os;
  os << "system,policy,n_iter,beta,runs,horizon,mean_return,std_err,seed\n";
  for (const ResultsRow& r : rows) {
    os << r.system << ',' << r.policy << ',' << r.n_iter << ','
       << format_real(r.beta) << ',' << r.runs << ',' << r.horizon << ','
       << format_real(r.mean_return) << ',' << format_real(r.std_err) << ','
       << r.seed << '\n';
  }
  return os.str();
}

std::string index_csv(const std::vector<IndexRow>& rows) {
  std::ostringstream os;
  os << "omega,index_value,kind\n";
  for (const IndexRow& r : rows) {
    os << format_real(r.omega) << ',' << format_real(r.value) << ',' << r.kind
       << '\n';
  }
  return os.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : ".";
  const fs::path tmp =
      dir / (target.filename().string() + ".tmp." +
             std::to_string(static_cast<unsigned long>(::getpid())));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " into place: " +
                             ec.message());
  }
}

}  // namespace awi::cli
