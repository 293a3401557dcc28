#pragma once

#include <string>
#include <string_view>
#include <vector>

// Lightweight call registry. Every public operation records its name on
// entry; `verify --all` uses this to assert that the scenario suite
// exercises the whole public surface.
namespace factored_info::oplog {

void note(std::string_view op_name);

// All operation names that the registry expects to see.
const std::vector<std::string>& expected_ops();

// Expected ops that have not been recorded since process start (or the
// last reset), sorted.
std::vector<std::string> missing_ops();

void reset();

}  // namespace factored_info::oplog
