#include <doctest.h>

#include "properties.hpp"

TEST_CASE("randomized and exhaustive property suites") {
    for (const auto& o : lcdring::props::all_suites(200)) {
        CAPTURE(o.name);
        CAPTURE(o.note);
        CHECK(o.cases > 0);
        CHECK(o.failures == 0);
    }
}
