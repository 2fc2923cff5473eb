#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "eostrata/zipstrata.hpp"

using namespace eostrata;

namespace {

bool is_square_oracle(long long v, int p)
{
    if (p == 0) {
        if (v < 0) return false;
        long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
        for (long long t = std::max(0LL, r - 2); t <= r + 2; ++t)
            if (t * t == v) return true;
        return false;
    }
    long long target = ((v % p) + p) % p;
    for (long long t = 1; t < p; ++t)
        if (t * t % p == target) return true;
    return false;
}

long long random_squarefree(std::mt19937& rng)
{
    static const long long pool[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, 10, -10, 11, 13, -15};
    std::uniform_int_distribution<int> pick(0, 15);
    return pool[pick(rng)];
}

}  // namespace

TEST_CASE("scheme of types examples", "[types]")
{
    CHECK(scheme_of_types({{0}, {1, 1, 1, 1}}).orbit_count() == 4);
    auto r = scheme_of_types({{0}, {1, 1, 1, 2}});
    CHECK(r.orbit_count() == 3);
    CHECK_FALSE(r.delta_square);
    CHECK(r.delta_class == 2);
    CHECK(scheme_of_types({{0}, {1, 2, 3, 5, 7}}).orbit_count() == 4);
    CHECK(scheme_of_types({{0}, {-1, 3, 1, 1, 2}}).orbit_count() == 4);
}

TEST_CASE("type D orbit counts follow the square class of (-1)^m d", "[types][property]")
{
    std::mt19937 rng(2024);
    for (int p : {0, 3, 5, 7, 11, 13})
        for (int m = 2; m <= 5; ++m)
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<long long> a(2 * m);
                long long delta = m % 2 ? -1 : 1;
                for (auto& x : a) {
                    do x = random_squarefree(rng);
                    while (p && x % p == 0);
                    delta *= x;
                }
                auto r = scheme_of_types({{p}, a});
                const bool square = is_square_oracle(delta, p);
                CHECK(r.delta_square == square);
                CHECK(r.orbit_count() == (square ? (1 << m) : (1 << (m - 1)) + (1 << (m - 2))));
                CHECK(r.orbit_count() == r.expected_count());
                std::size_t members = 0;
                for (const auto& o : r.orbits) members += o.size();
                CHECK(members == (1u << m));
                if (p) CHECK(r.galois_signs.size() <= 2);
            }
}

TEST_CASE("type B orbit counts are always 2^m", "[types][property]")
{
    std::mt19937 rng(99);
    for (int p : {0, 3, 5})
        for (int m = 1; m <= 4; ++m)
            for (int trial = 0; trial < 15; ++trial) {
                std::vector<long long> a(2 * m + 1);
                for (auto& x : a) {
                    do x = random_squarefree(rng);
                    while (p && x % p == 0);
                }
                CHECK(scheme_of_types({{p}, a}).orbit_count() == (1 << m));
            }
}

TEST_CASE("scheme of types input validation", "[types]")
{
    CHECK_THROWS(scheme_of_types({{2}, {1, 1, 1, 1}}));
    CHECK_THROWS(scheme_of_types({{0}, {1, 4, 1, 1}}));
    CHECK_THROWS(scheme_of_types({{0}, {1, 0, 1, 1}}));
    CHECK_THROWS(scheme_of_types({{0}, {1, 1}}));
    CHECK_THROWS(scheme_of_types({{3}, {1, 3, 1, 1}}));
    CHECK(squarefree_part(-12) == -3);
    CHECK(squarefree_part(50) == 2);
}
