#include "decwit/cli.hpp"

int main(int argc, char** argv) { return decwit::cli::run(argc, argv); }
