#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "memos/experiments.hpp"
#include "memos/report.hpp"
TEST_CASE("placeholder") { CHECK(true); }
