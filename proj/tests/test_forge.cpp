#include <doctest.h>
TEST_SUITE("forge") {}
