#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace looprep::cli {

// Dispatches one command line (without argv[0]). Returns the process exit
// status: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Regenerates the golden fixtures (levels table, classification counts,
// orbit partitions) under out_dir; byte-identical across runs.
void emit_golden(int max_rank, long long max_level, const std::string& out_dir);

} // namespace looprep::cli
