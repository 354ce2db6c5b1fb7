#include "dcad/cli.hpp"

int main(int argc, char** argv) { return dcad::cli::run(argc, argv); }
