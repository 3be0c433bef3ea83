#include "quadfib/cli.hpp"

int main(int argc, char** argv) { return quadfib::cli_main(argc, argv); }
