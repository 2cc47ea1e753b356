#include "symcap/cli.hpp"

int main(int argc, char** argv) { return symcap::cli::run(argc, argv); }
