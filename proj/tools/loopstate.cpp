#include "loopstate/cli.hpp"

int main(int argc, char** argv) { return loopstate::cli::run(argc, argv); }
