#include "cli.hpp"

int main(int argc, char** argv) { return repdual::cli::run(argc, argv); }
