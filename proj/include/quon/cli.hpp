#pragma once

namespace quon::cli {

/// Entry point shared by the installed binary and the in-process CLI tests.
/// Returns the process exit code: 0 success, 1 verification failure,
/// 2 usage error, 3 singular specialization.
int run(int argc, char** argv);

}  // namespace quon::cli
