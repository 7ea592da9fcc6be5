#pragma once

namespace jzero::cli {

// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(int argc, char** argv);

}  // namespace jzero::cli
