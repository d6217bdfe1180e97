#include "abspec/cli.hpp"

int main(int argc, char** argv) { return abspec::cli::run(argc, argv); }
