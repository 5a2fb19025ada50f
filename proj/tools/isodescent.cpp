#include "isodescent/cli.hpp"

int main(int argc, char** argv) { return isodescent::cli::run(argc, argv); }
