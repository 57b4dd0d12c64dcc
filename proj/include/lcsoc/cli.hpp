#pragma once

namespace lcsoc {

// Full command-line front end.  Returns the process exit code: 0 on
// success, 1 on a failed verification or check, 2 on input/config errors.
int run(int argc, char** argv);

}  // namespace lcsoc
