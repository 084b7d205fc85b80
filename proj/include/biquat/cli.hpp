#pragma once

namespace biquat {

/// Batch entry point behind the `biquat` binary. Exit codes: 0 all-pass,
/// 1 verification failures, 2 usage/config errors.
int run_cli(int argc, const char* const* argv);

}  // namespace biquat
