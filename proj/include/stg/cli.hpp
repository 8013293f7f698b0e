#pragma once

namespace stg {

// Batch front end. Exit status: 0 = yes, 1 = no (witness in the report),
// 2 = input error. The report document goes to stdout or --output.
int run_cli(int argc, const char* const* argv);

}  // namespace stg
