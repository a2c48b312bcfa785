#include <doctest.h>
TEST_SUITE("realize") {}
