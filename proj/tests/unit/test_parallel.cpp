#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectiforce/parallel.hpp"

using namespace rectiforce;

TEST_CASE("every index visited once")
{
    for (int jobs : {1, 2, 8}) {
        std::vector<std::atomic<int>> hits(97);
        parallel_for(hits.size(), jobs, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
}

TEST_CASE("job count clamping")
{
    CHECK(effective_jobs(8, 3) == 3);
    CHECK(effective_jobs(1, 100) == 1);
    CHECK(effective_jobs(0, 100) >= 1);
    CHECK(effective_jobs(4, 0) >= 1);
}

TEST_CASE("lowest failing index is rethrown")
{
    try {
        parallel_for(40, 4, [](std::size_t i) {
            if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "7");
    }
}
