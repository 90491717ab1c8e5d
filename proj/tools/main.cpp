#include "vatom/output.hpp"

int main(int argc, char** argv) { return vatom::run_cli(argc, argv); }
