#include "jzero/cli.hpp"

int main(int argc, char** argv) { return jzero::cli::run(argc, argv); }
