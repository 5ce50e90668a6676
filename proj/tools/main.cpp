#include "cli.hpp"

int main(int argc, char** argv) { return tinnots::run_cli(argc, argv); }
