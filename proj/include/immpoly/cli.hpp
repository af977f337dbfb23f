#pragma once

namespace immpoly {

// Entry point of the immpoly command-line tool.  Exit codes:
//   0  success (for `verify`: every assertion passed)
//   1  a verification assertion failed
//   2  usage or input error
//   3  problem size beyond the configured tractability caps
int run_cli(int argc, char** argv);

}  // namespace immpoly
