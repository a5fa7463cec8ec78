#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "gvm/abelian.hpp"
#include "gvm/errors.hpp"
#include "gvm/graph.hpp"
#include "gvm/spectrum.hpp"

using namespace gvm;

namespace {

GroupElement el(std::vector<int> r) { return GroupElement{std::move(r)}; }

std::vector<GroupElement> cyclic_set(std::vector<int> values) {
    std::vector<GroupElement> out;
    for (int v : values) out.push_back(el({v}));
    return out;
}

std::vector<AbelianGroup> small_groups() {
    return {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}),
            AbelianGroup({5}), AbelianGroup({2, 2})};
}

}  // namespace

TEST_CASE("z2 closed form") {
    auto c6 = z2_spectrum(cycle(6));
    CHECK(c6.constants == cyclic_set({0}));
    CHECK(c6.method == Method::ClosedForm);

    CHECK(z2_spectrum(complete(4)).constants == cyclic_set({1}));
    CHECK(z2_spectrum(path(3)).constants.empty());
    CHECK(z2_spectrum(path(3)).witnesses.empty());
}

TEST_CASE("z2 closed form agrees with brute force") {
    std::vector<Graph> cases{path(2),    path(3),     cycle(3),
                             cycle(6),   complete(4), complete(5),
                             complete_multipartite({1, 3}),
                             complete_multipartite({2, 3}),
                             complete_multipartite({1, 2, 2})};
    AbelianGroup z2({2});
    for (const Graph& g : cases)
        CHECK(z2_spectrum(g).constants == brute_force_spectrum(g, z2).constants);
}

TEST_CASE("cycle closed form examples") {
    CHECK(cycle_spectrum(6, AbelianGroup({4})).constants == cyclic_set({0, 2}));
    CHECK(cycle_spectrum(4, AbelianGroup({3})).constants == cyclic_set({0, 1, 2}));
    CHECK(cycle_spectrum(5, AbelianGroup({5})).constants ==
          cyclic_set({1, 2, 3, 4}));
    CHECK(cycle_spectrum(4, AbelianGroup({2})).constants == cyclic_set({0}));
    CHECK(cycle_spectrum(3, AbelianGroup({2})).constants == cyclic_set({0}));
    CHECK(cycle_spectrum(3, AbelianGroup({2, 2})).constants ==
          std::vector<GroupElement>{el({0, 0})});
    CHECK(cycle_spectrum(8, AbelianGroup({2, 2})).constants.size() == 4);
    CHECK_THROWS_AS(cycle_spectrum(2, AbelianGroup({3})), domain_error);
}

TEST_CASE("cycle closed form matches brute force") {
    for (int n = 3; n <= 8; ++n)
        for (const auto& a : small_groups()) {
            CAPTURE(n);
            CAPTURE(to_string(a));
            CHECK(cycle_spectrum(n, a).constants ==
                  brute_force_spectrum(cycle(n), a).constants);
        }
}

TEST_CASE("cycle spectra form subgroups exactly when expected") {
    for (int n = 3; n <= 8; ++n)
        for (const auto& a : small_groups()) {
            auto res = cycle_spectrum(n, a);
            bool expect = n % 4 == 0 || a.has_element_of_prime_order(2);
            CHECK(res.is_subgroup == expect);
        }
}

TEST_CASE("complete multipartite closed form examples") {
    CHECK(complete_multipartite_spectrum({1, 1, 1, 1}, AbelianGroup({3})).constants ==
          cyclic_set({0}));
    CHECK(complete_multipartite_spectrum({2, 2}, AbelianGroup({3})).constants ==
          cyclic_set({0, 1, 2}));
    CHECK(complete_multipartite_spectrum({1, 2, 2}, AbelianGroup({4})).constants ==
          cyclic_set({0, 2}));

    CHECK_THROWS_AS(complete_multipartite_spectrum({1, 2}, AbelianGroup({3})),
                    not_covered_error);
    CHECK_THROWS_AS(complete_multipartite_spectrum({1, 1}, AbelianGroup({3})),
                    not_covered_error);
    CHECK_THROWS_AS(complete_multipartite_spectrum({2, 2}, AbelianGroup({2})),
                    not_covered_error);
    CHECK_THROWS_AS(complete_multipartite_spectrum({3}, AbelianGroup({3})),
                    domain_error);
}

TEST_CASE("complete multipartite closed form matches brute force") {
    // Non-decreasing size lists, k >= 2, total <= 7, covered cases only.
    std::vector<std::vector<int>> lists;
    std::vector<int> prefix;
    auto gen = [&](auto&& self, int remaining, int minimum) -> void {
        if (prefix.size() >= 2) {
            bool has_one = prefix.front() == 1;
            if (!has_one || prefix.size() > 2) lists.push_back(prefix);
        }
        for (int s = minimum; s <= remaining; ++s) {
            prefix.push_back(s);
            self(self, remaining - s, s);
            prefix.pop_back();
        }
    };
    gen(gen, 7, 1);
    REQUIRE(lists.size() > 5);

    for (const auto& sizes : lists) {
        Graph g = complete_multipartite(sizes);
        for (const auto& a : small_groups()) {
            if (a.order() < 3) continue;
            CAPTURE(to_string(a));
            CHECK(complete_multipartite_spectrum(sizes, a).constants ==
                  brute_force_spectrum(g, a).constants);
        }
    }
}

TEST_CASE("singleton-part multipartite subgroup condition") {
    // With a singleton part the spectrum is a subgroup exactly when some
    // prime dividing k-1 has an element of that order in A.
    for (const auto& a : small_groups()) {
        if (a.order() < 3) continue;
        for (int k = 3; k <= 5; ++k) {
            std::vector<int> sizes(static_cast<std::size_t>(k), 2);
            sizes[0] = 1;
            auto res = complete_multipartite_spectrum(sizes, a);
            bool expect = false;
            for (long long p = 2; p <= k - 1; ++p)
                if (is_prime(p) && (k - 1) % p == 0 && a.has_element_of_prime_order(p))
                    expect = true;
            CHECK(res.is_subgroup == expect);
        }
    }
}

TEST_CASE("corona closed form examples") {
    CHECK(corona_spectrum(complete(1), {3}, AbelianGroup({3})).constants ==
          cyclic_set({1, 2}));
    CHECK(corona_spectrum(path(2), {2, 2}, AbelianGroup({4})).constants ==
          cyclic_set({1, 2, 3}));
    CHECK(corona_spectrum(cycle(3), {2, 2, 2}, AbelianGroup({3})).constants ==
          cyclic_set({1, 2}));

    CHECK_THROWS_AS(corona_spectrum(path(2), {1, 2}, AbelianGroup({3})),
                    not_covered_error);
    CHECK_THROWS_AS(corona_spectrum(path(2), {2, 2}, AbelianGroup({2})),
                    not_covered_error);
    CHECK_THROWS_AS(corona_spectrum(path(2), {2}, AbelianGroup({3})), domain_error);
}

TEST_CASE("corona closed form matches brute force") {
    struct Instance {
        Graph h;
        std::vector<int> sizes;
    };
    std::vector<Instance> instances{
        {complete(1), {2}},       {complete(1), {3}},
        {path(2), {2, 2}},        {path(2), {2, 3}},
        {path(2), {3, 2}},        {path(2), {3, 3}},
        {path(3), {2, 2, 2}},     {cycle(3), {2, 2, 2}},
    };
    for (const auto& [h, sizes] : instances) {
        std::vector<Graph> blocks;
        for (int s : sizes) blocks.push_back(empty_graph(s));
        Graph g = generalized_corona(h, blocks);
        REQUIRE(g.vertex_count() <= 9);
        for (const auto& a : small_groups()) {
            if (a.order() < 3) continue;
            CAPTURE(to_string(a));
            auto closed = corona_spectrum(h, sizes, a);
            CHECK(closed.constants == brute_force_spectrum(g, a).constants);
            // The spectrum is everything but zero.
            CHECK(closed.constants.size() ==
                  static_cast<std::size_t>(a.order() - 1));
            CHECK_FALSE(closed.contains(a.zero()));
        }
    }
}
