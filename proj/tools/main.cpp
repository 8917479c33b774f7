#include "pinchnet/harness.hpp"

int main(int argc, char** argv) { return pinchnet::cli_main(argc, argv); }
