#include "cblock/cli.hpp"

int main(int argc, char** argv) { return cblock::run_cli(argc, argv); }
