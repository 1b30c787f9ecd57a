#include "weilform/cli.hpp"

int main(int argc, char** argv) { return weilform::cli_dispatch(argc, argv); }
