#pragma once

namespace greenradio::cli {

// Full command-line front end. Returns the process exit status:
// 0 success, 2 schema violation, 3 domain error, 4 I/O error.
int run_cli(int argc, const char* const* argv);

}  // namespace greenradio::cli
