#include "immpoly/cli.hpp"

int main(int argc, char** argv) { return immpoly::run_cli(argc, argv); }
