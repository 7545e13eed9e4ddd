#include "pmf/f4.hpp"
#include "pmf/properties.hpp"

#include <doctest.h>

using namespace pmf;

TEST_CASE("property suites")
{
    auto primes = default_primes(2);
    for (auto& r : all_property_suites(11, primes)) {
        INFO(r.name << ": " << r.first_failure);
        CHECK(r.cases > 0);
        CHECK(r.failures == 0);
    }
}
