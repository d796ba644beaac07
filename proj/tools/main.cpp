#include "cli.hpp"

int main(int argc, char** argv) { return semirandom::cli::dispatch(argc, argv); }
