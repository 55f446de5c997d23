#include "swanson/cli.hpp"

int main(int argc, char** argv) { return swanson::cli::run(argc, argv); }
