#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vnlab/errors.hpp"

namespace vnlab {

enum class OutputFormat { Text, Tsv };

// Line-based `key = value` configuration with `#` comments and
// space-separated integer lists. Unknown keys are errors; m_blocks and
// n_blocks are required, everything else has defaults.
struct RunConfig {
  std::vector<int> mBlocks;
  std::vector<int> nBlocks;
  int depth = 1;
  std::uint64_t subsetBudget = std::uint64_t{1} << 20;
  int sampleCount = 10000;
  std::uint64_t seed = 0;
  std::vector<std::string> suites = {"monoid", "poset", "sheaf", "complete", "wedge-vee", "cone"};
  OutputFormat format = OutputFormat::Text;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

std::vector<std::string> parseSuiteList(const std::string& value);

}  // namespace vnlab
