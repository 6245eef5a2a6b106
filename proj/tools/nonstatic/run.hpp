#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nonstatic/scenario.hpp"

namespace nonstatic::cli {

/// Computes the scenario's subject and writes its table to `s.out` (plus
/// `s.out`.manifest.json) or, when `s.out` is empty, to `data`.
/// Returns the exit code; library failures are rethrown as CliError.
int run(const Scenario& s, std::ostream& data);

/// Manifest describing a finished run. Contains no timestamps or host
/// details, so identical inputs give identical bytes.
nlohmann::ordered_json manifest(const Scenario& s, const std::vector<std::string>& columns,
                                std::size_t rows);

/// Whole command line: parse, run, report. Errors go to `err` as one JSON
/// object per line.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonstatic::cli
