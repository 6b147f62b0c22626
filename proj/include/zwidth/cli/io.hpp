#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zwidth/analysis/region.hpp"
#include "zwidth/simulate/simulate.hpp"

namespace zwidth::cli {

/// Nine significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string fmt_num(double v);

/// Value rounded to nine significant digits; null when not finite.
nlohmann::ordered_json json_num(double v);

/// Header row "Pgain\Dgain" followed by the Dgain values; one row per
/// Pgain value with cell codes 0 = Unstable, 1 = StableLowPM, 2 = Stable.
std::string region_csv(const RegionGrid& g);
/// "t" followed by every trace channel.
std::string trace_csv(const SimTrace& t);
/// Rows with values formatted by fmt_num.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

/// Files produced by a command, keyed by file name.
using FileSet = std::map<std::string, std::string>;

/// Writes every file into `dir`, creating it when absent. Refuses to
/// overwrite any existing file unless `force`, checking all names before
/// writing the first. Throws ConfigError.
void write_files(const std::filesystem::path& dir, const FileSet& files, bool force);

}  // namespace zwidth::cli
