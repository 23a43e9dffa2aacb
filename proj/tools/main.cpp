#include "commgraph/cli.hpp"

int main(int argc, char** argv) { return commgraph::cli_main(argc, argv); }
