// Builds the amalgamated Catch2 implementation (with its default main) into
// a static library shared by every test executable.
#include <catch2/catch_amalgamated.cpp>
