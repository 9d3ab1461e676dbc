#include "freeaut/cli.hpp"

int main(int argc, char** argv) { return freeaut::cli_main(argc, argv); }
