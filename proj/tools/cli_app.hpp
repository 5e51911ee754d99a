#pragma once

namespace pacdim::cli {

/// Parses and runs one subcommand. Exit codes: 0 success, 2 malformed JSON,
/// 3 invariant violation, 4 enumeration guard exceeded without a subsample
/// seed; CLI11 usage errors keep their own codes.
int run_cli(int argc, char** argv);

}  // namespace pacdim::cli
