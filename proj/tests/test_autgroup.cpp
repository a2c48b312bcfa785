#include <doctest.h>
TEST_SUITE("autgroup") {}
