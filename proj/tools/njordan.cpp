#include "njordan/cli.hpp"

int main(int argc, char** argv) { return njordan::cli::run(argc, argv); }
