#include "cli.hpp"

int main(int argc, char** argv) { return tqft2d::cli::run(argc, argv); }
