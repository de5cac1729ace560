#include "vnlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vnlab {

namespace {

const std::vector<std::string> kAllSuites = {"monoid", "poset",     "sheaf",
                                             "complete", "wedge-vee", "cone"};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<int> parseIntList(const std::string& value, int line) {
  std::vector<int> out;
  std::istringstream is(value);
  std::string tok;
  while (is >> tok) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("expected an integer, got '" + tok + "'", line);
    }
  }
  if (out.empty()) throw UsageError("expected a non-empty integer list", line);
  return out;
}

std::uint64_t parseU64(const std::string& value, int line) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(trim(value), &pos);
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected a non-negative integer, got '" + value + "'", line);
  }
}

}  // namespace

std::vector<std::string> parseSuiteList(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  auto push = [&]() {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  for (char c : value) {
    if (c == ',' || c == ' ' || c == '\t') push();
    else cur += c;
  }
  push();
  if (out.size() == 1 && out[0] == "all") return kAllSuites;
  for (auto& s : out)
    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
      throw UsageError("unknown suite '" + s + "'");
  if (out.empty()) throw UsageError("suites must be non-empty");
  return out;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  bool haveM = false, haveN = false;
  std::istringstream is(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(is, raw)) {
    ++lineNo;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("expected 'key = value'", lineNo);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw UsageError("missing value for '" + key + "'", lineNo);

    if (key == "m_blocks") {
      cfg.mBlocks = parseIntList(value, lineNo);
      haveM = true;
    } else if (key == "n_blocks") {
      cfg.nBlocks = parseIntList(value, lineNo);
      haveN = true;
    } else if (key == "depth") {
      cfg.depth = static_cast<int>(parseU64(value, lineNo));
      if (cfg.depth < 1) throw UsageError("depth must be at least 1", lineNo);
    } else if (key == "subset_budget") {
      cfg.subsetBudget = parseU64(value, lineNo);
    } else if (key == "sample_count") {
      cfg.sampleCount = static_cast<int>(parseU64(value, lineNo));
    } else if (key == "seed") {
      cfg.seed = parseU64(value, lineNo);
    } else if (key == "suites") {
      try {
        cfg.suites = parseSuiteList(value);
      } catch (const UsageError& e) {
        throw UsageError(e.what(), lineNo);
      }
    } else if (key == "format") {
      if (value == "text") cfg.format = OutputFormat::Text;
      else if (value == "tsv") cfg.format = OutputFormat::Tsv;
      else throw UsageError("format must be text or tsv", lineNo);
    } else {
      throw UsageError("unknown key '" + key + "'", lineNo);
    }
  }
  if (!haveM) throw UsageError("m_blocks is required");
  if (!haveN) throw UsageError("n_blocks is required");
  for (int v : cfg.mBlocks)
    if (v < 1) throw UsageError("m_blocks entries must be at least 1");
  for (int v : cfg.nBlocks)
    if (v < 1) throw UsageError("n_blocks entries must be at least 1");
  if (cfg.sampleCount < 0) throw UsageError("sample_count must be non-negative");
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace vnlab
