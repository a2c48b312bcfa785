#include <doctest.h>
TEST_SUITE("hull") {}
