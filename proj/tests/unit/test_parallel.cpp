#include "framelab/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

using namespace framelab;

TEST_CASE("every index is visited exactly once") {
    for (const char* threads : {"1", "3", "8"}) {
        setenv("FRAMELAB_THREADS", threads, 1);
        for (std::size_t n : {0u, 1u, 7u, 1000u}) {
            std::vector<std::atomic<int>> hits(n);
            parallel_for(n, [&](std::size_t k) { ++hits[k]; });
            for (const auto& h : hits) CHECK(h.load() == 1);
        }
    }
    unsetenv("FRAMELAB_THREADS");
}

TEST_CASE("FRAMELAB_THREADS caps the worker count") {
    setenv("FRAMELAB_THREADS", "5", 1);
    CHECK(worker_count() == 5);
    setenv("FRAMELAB_THREADS", "0", 1);
    CHECK(worker_count() >= 1);
    setenv("FRAMELAB_THREADS", "junk", 1);
    CHECK(worker_count() >= 1);
    unsetenv("FRAMELAB_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("exceptions propagate") {
    setenv("FRAMELAB_THREADS", "4", 1);
    CHECK_THROWS_AS(parallel_for(50, [](std::size_t k) {
                        if (k == 17) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    unsetenv("FRAMELAB_THREADS");
}
