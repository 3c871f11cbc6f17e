#include "glt/pipeline.hpp"

int main(int argc, char** argv) { return glt::cli_main(argc, argv); }
