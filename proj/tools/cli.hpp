// Command line front end. run() is separate from main so tests can drive it.
#pragma once

#include <ostream>

namespace shallow::cli {

enum ExitCode { kOk = 0, kFails = 1, kInconclusive = 2, kUsage = 64, kInternal = 70 };

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace shallow::cli
