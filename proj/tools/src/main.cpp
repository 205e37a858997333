#include "coulomb/cli/cli.hpp"

int main(int argc, char** argv) { return coulomb::cli::run(argc, argv); }
