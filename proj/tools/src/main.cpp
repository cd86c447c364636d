#include "cli.hpp"

int main(int argc, char** argv) { return qsc_cli::run(argc, argv); }
