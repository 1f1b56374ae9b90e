#include "effcat/cli.hpp"

int main(int argc, char** argv) { return effcat::cli_main(argc, argv); }
