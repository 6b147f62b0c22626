#include "zwidth/cli/io.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "zwidth/error.hpp"

namespace zwidth::cli {

std::string fmt_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.9g}", v);
}

nlohmann::ordered_json json_num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(fmt::format("{:.9g}", v));
}

std::string region_csv(const RegionGrid& g) {
  std::string out = "Pgain\\Dgain";
  for (double d : g.d_axis) out += "," + fmt_num(d);
  out += "\n";
  for (std::size_t i = 0; i < g.p_axis.size(); ++i) {
    out += fmt_num(g.p_axis[i]);
    for (std::size_t j = 0; j < g.d_axis.size(); ++j) out += fmt::format(",{}", static_cast<int>(g.at(i, j)));
    out += "\n";
  }
  return out;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + fmt_num(r[i]);
    out += "\n";
  }
  return out;
}

std::string trace_csv(const SimTrace& t) {
  std::vector<std::string> header{"t"};
  header.insert(header.end(), t.labels.begin(), t.labels.end());
  std::vector<std::vector<double>> rows(t.time.size());
  for (std::size_t k = 0; k < t.time.size(); ++k) {
    rows[k].reserve(header.size());
    rows[k].push_back(t.time[k]);
    for (const auto& ch : t.channels) rows[k].push_back(ch[k]);
  }
  return csv(header, rows);
}

void write_files(const std::filesystem::path& dir, const FileSet& files, bool force) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError(fmt::format("cannot create output directory {}: {}", dir.string(), ec.message()));
  if (!force) {
    for (const auto& [name, _] : files)
      if (fs::exists(dir / name))
        throw ConfigError(fmt::format("{} exists; pass --force to overwrite", (dir / name).string()));
  }
  for (const auto& [name, body] : files) {
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    f << body;
    if (!f) throw ConfigError(fmt::format("cannot write {}", (dir / name).string()));
  }
}

}  // namespace zwidth::cli
