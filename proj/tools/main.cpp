#include "k3nu/cli.hpp"

int main(int argc, char** argv) { return k3nu::run_cli(argc, argv); }
