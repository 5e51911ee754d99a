#include "cli_app.hpp"

int main(int argc, char** argv) { return pacdim::cli::run_cli(argc, argv); }
