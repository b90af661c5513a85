#include "gwb/workbench/cli.hpp"

int main(int argc, char** argv) { return gwb::run_cli(argc, argv); }
