// vnlab: builds the moduli monoid of standard homomorphisms between block
// algebras and mechanically verifies its structure: monoid axioms and
// cancellation, the induced partial order, the sheaf conditions of the
// truncated subalgebra sketch, Dedekind completeness, the wedge-vee identity,
// and divisibility/cone structure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vnlab/cone.hpp"
#include "vnlab/config.hpp"
#include "vnlab/moduli.hpp"
#include "vnlab/runner.hpp"

namespace {

using namespace vnlab;

// element syntax: rows separated by ';', entries by ','  e.g. "1,0;2,1"
MultiplicityMatrix parseElement(const std::string& text, const BlockAlgebra& m,
                                const BlockAlgebra& n) {
  MultiplicityMatrix c = zeroMatrix(m, n);
  std::vector<std::string> rows;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  rows.push_back(cur);
  if (rows.size() != static_cast<size_t>(m.numBlocks()))
    throw UsageError("element '" + text + "' needs " + std::to_string(m.numBlocks()) + " rows");
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : rows[i]) {
      if (ch == ',') {
        cells.push_back(cell);
        cell.clear();
      } else if (ch != ' ') {
        cell += ch;
      }
    }
    cells.push_back(cell);
    if (cells.size() != static_cast<size_t>(n.numBlocks()))
      throw UsageError("row " + std::to_string(i + 1) + " of '" + text + "' needs " +
                       std::to_string(n.numBlocks()) + " entries");
    for (size_t j = 0; j < cells.size(); ++j) {
      try {
        c.entries[i][j] = std::stoi(cells[j]);
      } catch (const std::exception&) {
        throw UsageError("bad entry '" + cells[j] + "' in element '" + text + "'");
      }
      if (c.entries[i][j] < 0) throw UsageError("entries must be non-negative");
    }
  }
  if (!c.withinCapacity()) throw UsageError("element '" + text + "' exceeds the ambient capacity");
  return c;
}

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int runOracle(const std::string& op, const std::string& inputPath, const std::string& elems) {
  RunConfig cfg = parse_config(inputPath);
  BlockAlgebra m(cfg.mBlocks), n(cfg.nBlocks);
  ModuliMonoid monoid = build_moduli_canonical(m, n, cfg.depth);

  std::vector<int> ids;
  for (auto& spec : splitWhitespace(elems)) {
    MultiplicityMatrix c = parseElement(spec, m, n);
    int idx = monoid.indexOf(c);
    if (idx < 0) throw UsageError("element " + c.str() + " is not a class of this monoid");
    ids.push_back(idx);
  }
  if (ids.empty()) throw UsageError("--elems needs at least one element");

  OrderData ord = deriveOrder(monoid.table);
  if (op == "add") {
    if (ids.size() != 2) throw UsageError("add takes exactly two elements");
    int s = monoid.table.add(ids[0], ids[1]);
    std::cout << (s < 0 ? "undefined" : monoid.table.nameOf(s)) << '\n';
  } else if (op == "meet") {
    MeetResult r = meet(monoid.table, ord, ids);
    if (!r.found) throw UsageError("meet failed: " + r.failure);
    std::cout << monoid.table.nameOf(r.value) << '\n';
  } else if (op == "join") {
    JoinResult r = join(monoid.table, ord, ids);
    if (r.status == JoinResult::Status::NoUpperBound) std::cout << "no-upper-bound\n";
    else if (r.found()) std::cout << monoid.table.nameOf(r.value) << '\n';
    else throw UsageError("join failed: " + r.failure);
  } else {
    throw UsageError("oracle operation must be meet, join or add");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moduli-space verifier for finite-dimensional block algebras"};
  app.require_subcommand(1);

  std::string runInput, runSuites, runFormat;
  std::uint64_t runSeed = 0;
  bool haveSeed = false;
  auto* run = app.add_subcommand("run", "run the verification suites from a config file");
  run->add_option("--input", runInput, "config file path")->required();
  run->add_option("--suites", runSuites, "comma-separated subset of the suites");
  auto* seedOpt = run->add_option("--seed", runSeed, "override the config seed");
  run->add_option("--format", runFormat, "text or tsv");

  std::string oracleOp, oracleInput, oracleElems;
  auto* oracle = app.add_subcommand("oracle", "ad-hoc meet/join/add queries");
  oracle->add_option("op", oracleOp, "meet, join or add")->required();
  oracle->add_option("--input", oracleInput, "config file path")->required();
  oracle->add_option("--elems", oracleElems, "whitespace-separated elements, rows ';', entries ','")
      ->required();

  try {
    app.parse(argc, argv);
    haveSeed = seedOpt->count() > 0;

    if (run->parsed()) {
      RunConfig cfg = parse_config(runInput);
      if (!runSuites.empty()) cfg.suites = parseSuiteList(runSuites);
      if (haveSeed) cfg.seed = runSeed;
      if (!runFormat.empty()) {
        if (runFormat == "text") cfg.format = OutputFormat::Text;
        else if (runFormat == "tsv") cfg.format = OutputFormat::Tsv;
        else throw UsageError("format must be text or tsv");
      }
      RunResult result = run_suites(cfg);
      std::cout << result.render(cfg.format);
      return result.exitStatus();
    }
    if (oracle->parsed()) return runOracle(oracleOp, oracleInput, oracleElems);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const vnlab::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
