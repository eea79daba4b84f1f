#pragma once
// Batch commands over algebra files: analyze, auslander, tilting, verify.
// Human-readable text goes to `out`, diagnostics to `err`; when --json is
// given, the structured report is also written to that path with a stable
// key order, byte-identical across runs on identical input.
//
// Exit codes: 0 success / all claims pass, 1 a claim failed, 2 usage or
// input error, 3 a cap was exceeded where a certified answer was required.

#include <iosfwd>
#include <string>
#include <vector>

namespace qhom {

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qhom
