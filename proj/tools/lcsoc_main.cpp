#include "lcsoc/cli.hpp"

int main(int argc, char** argv) { return lcsoc::run(argc, argv); }
