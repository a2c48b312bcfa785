#include <doctest.h>
TEST_SUITE("diagrams") {}
