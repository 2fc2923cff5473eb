#include <catch_amalgamated.hpp>

#include <set>

#include "eostrata/zipstrata.hpp"

using namespace eostrata;

namespace {

std::set<std::vector<int>> lower_ideal(const WeylElement& w)
{
    std::set<std::vector<int>> out;
    const Word word = reduced_word(w);
    for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
        Word sub;
        for (std::size_t t = 0; t < word.size(); ++t)
            if (mask >> t & 1u) sub.push_back(word[t]);
        out.insert(from_word(w.system(), sub).images());
    }
    return out;
}

// W_J as the elements of W all of whose reduced words use letters from J.
std::vector<WeylElement> enumerate_subgroup(const CoxeterSystem& sys, const Subset& J)
{
    std::vector<WeylElement> out;
    for (const auto& w : enumerate(sys)) {
        bool inside = true;
        for (int i : reduced_word(w)) inside = inside && std::find(J.begin(), J.end(), i) != J.end();
        if (inside) out.push_back(w);
    }
    return out;
}

// The closure order straight from its definition, with Bruhat order by subwords.
bool preceq_oracle(const ZipDatum& d, const WeylElement& wp, const WeylElement& w)
{
    const auto ideal = lower_ideal(w);
    for (const auto& y : enumerate_subgroup(d.sys, d.J)) {
        const WeylElement c = y * wp * d.x * apply_automorphism(y.inverse(), d.phi) * d.x.inverse();
        if (ideal.count(c.images())) return true;
    }
    return false;
}

std::vector<Subset> subsets(int m)
{
    std::vector<Subset> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        Subset s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("zip datum examples", "[zipstrata]")
{
    CoxeterSystem b2(Family::B, 2);
    auto d = build_zip_datum(b2, {2});
    CHECK(d.K == Subset{2});
    CHECK(cycle_string(to_big_permutation(d.x)) == "(1,5)");
    CHECK(d.x_cross_checked);

    for (const auto& sys : std::vector<CoxeterSystem>{{Family::B, 3}, {Family::D, 4}, {Family::A, 3}}) {
        auto e = build_zip_datum(sys, {});
        CHECK(e.K.empty());
        CHECK(e.x == longest_element(sys));
    }

    CoxeterSystem d4(Family::D, 4);
    auto f = build_zip_datum(d4, {2, 3, 4});
    CHECK(cycle_string(to_big_permutation(f.x)) == "(1,8)(4,5)");
    CHECK(reduced_word(f.x) == Word{1, 2, 3, 4, 2, 1});

    CHECK_THROWS_AS(build_zip_datum(CoxeterSystem(Family::B, 3), {1}, {3, 2, 1}), std::invalid_argument);
    auto flipped = build_zip_datum(d4, {1, 3}, {1, 2, 4, 3});
    CHECK(in_left_reps(flipped.x, flipped.K));
    CHECK(in_right_reps(flipped.x, apply_automorphism(flipped.J, flipped.phi)));
}

TEST_CASE("K and x invariants on all small data", "[zipstrata][property]")
{
    for (const auto& sys : std::vector<CoxeterSystem>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::B, 4}, {Family::D, 3}})
        for (const auto& J : subsets(sys.rank())) {
            auto d = build_zip_datum(sys, J);
            CHECK(d.x_cross_checked);
            auto phij = apply_automorphism(d.J, d.phi);
            CHECK(in_left_reps(d.x, d.K));
            CHECK(in_right_reps(d.x, phij));
            // K = w0 phi(J) w0^{-1} elementwise
            for (std::size_t t = 0; t < phij.size(); ++t) {
                auto c = d.omega0 * simple_reflection(sys, phij[t]) * d.omega0.inverse();
                CHECK(std::find(d.K.begin(), d.K.end(), reduced_word(c).at(0)) != d.K.end());
            }
        }
}

TEST_CASE("closure order matches its definition", "[zipstrata][property]")
{
    std::vector<std::pair<CoxeterSystem, Automorphism>> cases{
        {{Family::B, 2}, {1, 2}}, {{Family::B, 3}, {1, 2, 3}}, {{Family::D, 3}, {1, 2, 3}},
        {{Family::D, 3}, {1, 3, 2}}, {{Family::A, 3}, {3, 2, 1}}, {{Family::A, 2}, {1, 2}}};
    for (const auto& [sys, phi] : cases)
        for (const auto& J : subsets(sys.rank())) {
            if (!is_diagram_automorphism(sys, phi)) continue;
            auto d = build_zip_datum(sys, J, phi);
            auto reps = min_coset_reps(sys, J, Side::Left);
            if (reps.size() > 30) continue;
            ClosureOrder order(d);
            for (const auto& a : reps)
                for (const auto& b : reps) CHECK(order(a, b) == preceq_oracle(d, a, b));
        }
}

TEST_CASE("closure order is a partial order refining length", "[zipstrata][property]")
{
    for (const auto& sys : std::vector<CoxeterSystem>{{Family::B, 3}, {Family::D, 4}, {Family::B, 4}, {Family::A, 4}})
        for (const auto& J : subsets(sys.rank())) {
            auto reps = min_coset_reps(sys, J, Side::Left);
            if (reps.size() > 40) continue;
            auto p = strata_poset(build_zip_datum(sys, J));
            const int n = static_cast<int>(p.strata.size());
            for (int i = 0; i < n; ++i) {
                CHECK(p.leq(i, i));
                for (int j = 0; j < n; ++j) {
                    if (i != j && p.leq(i, j)) {
                        CHECK_FALSE(p.leq(j, i));
                        CHECK(p.strata[i].dim <= p.strata[j].dim);
                    }
                    if (bruhat_leq(p.strata[i].w, p.strata[j].w)) CHECK(p.leq(i, j));
                    for (int k = 0; k < n; ++k)
                        if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
                }
            }
            // unique minimum e and unique maximum
            CHECK(p.strata.front().w.is_identity());
            int maxima = 0;
            for (int i = 0; i < n; ++i) {
                CHECK(p.leq(0, i));
                bool top = true;
                for (int j = 0; j < n; ++j) top = top && p.leq(j, i);
                maxima += top;
            }
            CHECK(maxima == 1);
        }
}

TEST_CASE("stratum poset examples", "[zipstrata]")
{
    auto chain = strata_poset(build_zip_datum(CoxeterSystem(Family::B, 2), {2}), 3);
    REQUIRE(chain.strata.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(chain.strata[i].dim == i);
        CHECK(chain.strata[i].orbit_dim == 3 + i);
    }
    CHECK(chain.hasse == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(preceq(chain.datum, chain.strata[1].w, chain.strata[2].w));

    auto single = strata_poset(build_zip_datum(CoxeterSystem(Family::D, 4), {1, 2, 3, 4}));
    REQUIRE(single.strata.size() == 1);
    CHECK(single.strata[0].dim == 0);

    auto d3 = strata_poset(build_zip_datum(CoxeterSystem(Family::D, 3), {2, 3}));
    std::vector<int> dims;
    for (const auto& s : d3.strata) dims.push_back(s.dim);
    CHECK(dims == std::vector<int>{0, 1, 2, 2, 3, 4});
    CHECK_FALSE(d3.leq(2, 3));
    CHECK_FALSE(d3.leq(3, 2));
    CHECK(d3.hasse.size() == 6);  // diamond in the middle

    CoxeterSystem b2(Family::B, 2);
    CHECK_THROWS_AS(preceq(chain.datum, simple_reflection(b2, 2), identity(b2)), std::invalid_argument);
}

TEST_CASE("transitive reduction", "[zipstrata]")
{
    std::vector<std::vector<char>> order{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    CHECK(transitive_reduction(order) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("CSpin strata for small n", "[zipstrata]")
{
    auto r3 = cspin_strata(3);
    CHECK(r3.poset.strata.size() == 4);
    auto r4 = cspin_strata(4);
    std::vector<int> dims;
    for (const auto& s : r4.poset.strata) dims.push_back(s.dim);
    CHECK(dims == std::vector<int>{0, 1, 2, 2, 3, 4});
    auto r1 = cspin_strata(1);
    CHECK(r1.poset.strata.size() == 2);
    for (int n : {1, 3, 5, 7}) {
        auto r = cspin_strata(n);
        CHECK(r.passed("strata-count"));
        CHECK(r.passed("odd-structure"));
        CHECK(r.passed("order"));
        CHECK(r.passed("x-form"));
    }
    for (int n : {4, 6, 8}) {
        auto r = cspin_strata(n);
        CHECK(r.passed("strata-count"));
        CHECK(r.passed("even-structure"));
        CHECK(r.passed("order"));
        CHECK(r.passed("x-form"));
        int pairs = 0;
        for (std::size_t i = 0; i < r.poset.strata.size(); ++i)
            for (std::size_t j = i + 1; j < r.poset.strata.size(); ++j)
                pairs += !r.poset.leq(i, j) && !r.poset.leq(j, i);
        CHECK(pairs == 1);
    }
    // n = 2 degenerates to D_2: only two strata
    auto r2 = cspin_strata(2);
    CHECK(r2.poset.strata.size() == 2);
    CHECK_FALSE(r2.passed("strata-count"));
    CHECK_THROWS_AS(cspin_strata(0), std::out_of_range);
    CHECK_THROWS_AS(cspin_strata(15), std::out_of_range);
}

TEST_CASE("expected CSpin words", "[zipstrata]")
{
    auto odd = cspin_expected_words(5);  // m = 3
    REQUIRE(odd.size() == 6);
    CHECK(odd[5].second == Word{1, 2, 3, 2, 1});
    CHECK(odd[4].second == Word{1, 2, 3, 2});
    auto even = cspin_expected_words(6);  // m = 4
    REQUIRE(even.size() == 8);
    CHECK(even[3].first == "w'_3");
    CHECK(even[3].second == Word{1, 2, 4});
    CHECK(even[4].second == Word{1, 2, 3});
    CHECK(even[7].second == Word{1, 2, 3, 4, 2, 1});
}
