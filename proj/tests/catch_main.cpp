// Single translation unit for the Catch2 v3 amalgamated implementation,
// which already supplies main().
#include <catch2/catch_amalgamated.cpp>
