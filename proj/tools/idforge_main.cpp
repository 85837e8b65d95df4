#include "idforge/cli.hpp"

int main(int argc, char** argv) { return idforge::cli_main(argc, argv); }
