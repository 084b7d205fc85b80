#include "biquat/cli.hpp"

int main(int argc, char** argv) { return biquat::run_cli(argc, argv); }
