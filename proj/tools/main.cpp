#include "frameposet/cli.hpp"

int main(int argc, char** argv) { return frameposet::run_cli(argc, argv); }
