#include "gvm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <tuple>

#include "gvm/errors.hpp"
#include "gvm/io.hpp"
#include "gvm/spectrum.hpp"

namespace gvm::verify {

namespace {

std::atomic<bool> g_fault{false};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0,1) from the standardized mt19937_64 stream; avoids the
// implementation-defined std distributions so runs are portable.
double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

long long rand_below(std::mt19937_64& rng, long long k) {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(k));
}

int rand_between(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rand_below(rng, hi - lo + 1));
}

struct NamedGraph {
    std::string name;
    Graph graph;
};

// An 8-vertex demonstration graph: one hub adjacent to everything plus a
// complete bipartite 2x2 on the rim, giving twin classes of sizes 3,1,2,2.
Graph hub8() {
    return Graph::build(8, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                            {3, 4}, {3, 6}, {7, 4}, {7, 6}});
}

// Ring join with class sizes 2,3,2,2: every twin class has >= 2 members.
Graph c4_join_2322() {
    return h_join(cycle(4), {empty_graph(2), empty_graph(3), empty_graph(2),
                             empty_graph(2)});
}

std::vector<NamedGraph> fixtures() {
    std::vector<NamedGraph> out;
    out.push_back({"path2", path(2)});
    out.push_back({"path3", path(3)});
    for (int n = 3; n <= 8; ++n)
        out.push_back({"cycle" + std::to_string(n), cycle(n)});
    for (int n = 3; n <= 5; ++n)
        out.push_back({"complete" + std::to_string(n), complete(n)});
    out.push_back({"kpartite-1-3", complete_multipartite({1, 3})});
    out.push_back({"kpartite-2-3", complete_multipartite({2, 3})});
    out.push_back({"kpartite-2-2", complete_multipartite({2, 2})});
    out.push_back({"kpartite-1-2-2", complete_multipartite({1, 2, 2})});
    out.push_back({"hub8", hub8()});
    out.push_back({"c4join-2322", c4_join_2322()});
    return out;
}

std::vector<AbelianGroup> groups_from_three() {
    return {AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({5}),
            AbelianGroup({2, 2})};
}

std::vector<AbelianGroup> all_small_groups() {
    std::vector<AbelianGroup> gs{AbelianGroup({2})};
    for (auto& a : groups_from_three()) gs.push_back(a);
    return gs;
}

std::string constants_string(const std::vector<GroupElement>& cs) {
    std::string out = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += to_string(cs[i]);
    }
    return out + "}";
}

void add_failure(SuiteReport& rep, const Graph& g, const AbelianGroup& a,
                 std::string expected, std::string observed) {
    rep.failures.push_back(SuiteFailure{to_edge_list_string(g), to_string(a),
                                        std::move(expected), std::move(observed)});
}

void add_failure(SuiteReport& rep, const Graph& g, const std::string& group,
                 std::string expected, std::string observed) {
    rep.failures.push_back(SuiteFailure{to_edge_list_string(g), group,
                                        std::move(expected), std::move(observed)});
}

// Fixtures plus `trials` random graphs with no isolated vertices.
std::vector<NamedGraph> make_cases(long long trials, std::mt19937_64& rng, int nmin,
                                   int nmax) {
    std::vector<NamedGraph> cases = fixtures();
    for (long long i = 0; i < trials; ++i) {
        int n = rand_between(rng, nmin, nmax);
        double p = 0.35 + 0.15 * static_cast<double>(rand_below(rng, 4));
        cases.push_back({"random-" + std::to_string(i), random_graph(n, p, rng())});
    }
    return cases;
}

Graph random_connected(std::mt19937_64& rng, int nmin, int nmax) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int n = rand_between(rng, nmin, nmax);
        double p = 0.4 + 0.2 * static_cast<double>(rand_below(rng, 3));
        Graph g = random_graph(n, p, rng());
        if (is_connected(g)) return g;
    }
    throw domain_error("no connected sample after 200 attempts");
}

// ---------------------------------------------------------------- suites

void s_symmetry(SuiteReport& rep, long long trials, std::mt19937_64& rng, int jobs) {
    for (const auto& [name, g] : make_cases(trials, rng, 3, 8))
        for (const auto& a : all_small_groups()) {
            auto res = spectrum(g, a, Strategy::Auto, kDefaultBudget, jobs);
            ++rep.cases;
            for (const auto& c : res.constants)
                if (!res.contains(a.neg(c))) {
                    add_failure(rep, g, a,
                                "spectrum closed under negation",
                                to_string(c) + " present without " +
                                    to_string(a.neg(c)) + " in " +
                                    constants_string(res.constants));
                    break;
                }
        }
}

void s_pendant_zero(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                    int jobs) {
    std::vector<NamedGraph> cases;
    for (auto& nc : fixtures())
        if (has_pendant(nc.graph)) cases.push_back(nc);
    for (long long i = 0; i < trials; ++i) {
        // Attach a fresh pendant to vertex 0 of a random base graph.
        Graph base = random_graph(rand_between(rng, 3, 7), 0.5, rng());
        auto edges = base.edges();
        edges.emplace_back(0, base.vertex_count());
        cases.push_back({"pendant-random-" + std::to_string(i),
                         Graph::build(base.vertex_count() + 1, edges)});
    }
    for (const auto& [name, g] : cases)
        for (const auto& a : all_small_groups()) {
            auto res = spectrum(g, a, Strategy::Auto, kDefaultBudget, jobs);
            ++rep.cases;
            if (res.contains(a.zero()))
                add_failure(rep, g, a, "0 absent from the spectrum (pendant vertex)",
                            constants_string(res.constants));
        }
}

void s_z2_eulerian(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                   int jobs) {
    AbelianGroup z2({2});
    for (const auto& [name, g] : make_cases(trials, rng, 3, 10)) {
        auto brute = brute_force_spectrum(g, z2, kDefaultBudget, jobs);
        auto closed = z2_spectrum(g);
        ++rep.cases;
        if (brute.constants != closed.constants) {
            add_failure(rep, g, z2,
                        "Z2 closed form " + constants_string(closed.constants),
                        "brute force " + constants_string(brute.constants));
            continue;
        }
        if (!is_connected(g) || brute.constants.empty()) {
            ++rep.skipped;  // law hypotheses: connected and Z2-magic
            continue;
        }
        if (brute.is_subgroup != is_eulerian(g))
            add_failure(rep, g, z2,
                        std::string("subgroup verdict ") +
                            (is_eulerian(g) ? "true" : "false") + " (eulerian test)",
                        brute.is_subgroup ? "true" : "false");
    }
}

void s_zp_saturation(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                     int jobs) {
    for (const auto& [name, g] : make_cases(trials, rng, 3, 8))
        for (int p : {3, 5}) {
            AbelianGroup zp({p});
            auto res = spectrum(g, zp, Strategy::Auto, kDefaultBudget, jobs);
            ++rep.cases;
            bool any_nonzero = false;
            for (const auto& c : res.constants)
                if (!c.is_zero()) any_nonzero = true;
            if (!any_nonzero) continue;
            for (long long i = 1; i < zp.order(); ++i)
                if (!res.contains(zp.element_at(i))) {
                    add_failure(rep, g, zp,
                                "every nonzero element present once one is",
                                constants_string(res.constants));
                    break;
                }
        }
}

void s_subgroup_shortcut(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                         int jobs) {
    std::vector<AbelianGroup> gs{AbelianGroup({3}), AbelianGroup({5}),
                                 AbelianGroup({2, 2})};
    for (const auto& [name, g] : make_cases(trials, rng, 3, 8))
        for (const auto& a : gs) {
            ++rep.cases;
            try {
                SubgroupReport report = subgroup_report(g, a, kDefaultBudget, jobs);
                const auto& res = report.spectrum;
                if (res.constants.empty()) {
                    ++rep.skipped;  // law assumes the graph is A-vertex magic
                    continue;
                }
                if (res.is_subgroup != res.contains(a.zero()))
                    add_failure(rep, g, a, "subgroup iff 0 in spectrum",
                                constants_string(res.constants));
            } catch (const std::logic_error& e) {
                add_failure(rep, g, a, "shortcut agrees with closure check", e.what());
            }
        }
}

void s_reduced_equivalence(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                           int jobs) {
    bool fault_pending = g_fault.load();
    for (const auto& [name, g] : make_cases(trials, rng, 3, 8))
        for (const auto& a : groups_from_three()) {
            auto brute = brute_force_spectrum(g, a, kDefaultBudget, jobs);
            auto reduced = reduced_spectrum(g, a, kDefaultBudget, jobs);
            std::vector<GroupElement> reduced_constants = reduced.constants;
            if (fault_pending) {
                // Test hook: toggle membership of 0 in the computed set.
                auto it = std::lower_bound(reduced_constants.begin(),
                                           reduced_constants.end(), a.zero());
                if (it != reduced_constants.end() && *it == a.zero())
                    reduced_constants.erase(it);
                else
                    reduced_constants.insert(it, a.zero());
                fault_pending = false;
            }
            ++rep.cases;
            if (brute.constants != reduced_constants)
                add_failure(rep, g, a,
                            "reduced solver equals brute force: " +
                                constants_string(brute.constants),
                            constants_string(reduced_constants));
        }
}

void s_cycle_closed_form(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                         int jobs) {
    std::vector<int> ns{3, 4, 5, 6, 7, 8};
    for (long long i = 0; i < trials; ++i) ns.push_back(rand_between(rng, 3, 10));
    for (int n : ns) {
        Graph g = cycle(n);
        for (const auto& a : all_small_groups()) {
            auto closed = cycle_spectrum(n, a);
            auto brute = brute_force_spectrum(g, a, kDefaultBudget, jobs);
            ++rep.cases;
            if (closed.constants != brute.constants) {
                add_failure(rep, g, a,
                            "cycle closed form " + constants_string(brute.constants),
                            constants_string(closed.constants));
                continue;
            }
            // Every magic labeling of a cycle repeats with period 4.
            for (const auto& [c, l] : brute.witnesses)
                for (int v = 0; v < n; ++v)
                    if (l.values[v] != l.values[(v + 4) % n]) {
                        add_failure(rep, g, a, "witness labels have period 4",
                                    "mismatch at vertex " + std::to_string(v) +
                                        " for constant " + to_string(c));
                        v = n;
                    }
        }
    }
}

// Non-decreasing size lists with k >= 2 parts and total <= cap.
void covered_size_lists(std::vector<int>& prefix, int remaining, int minimum,
                        std::vector<std::vector<int>>& out) {
    if (prefix.size() >= 2) {
        bool has_one = prefix.front() == 1;  // non-decreasing
        if (!has_one || prefix.size() > 2) out.push_back(prefix);
    }
    for (int s = minimum; s <= remaining; ++s) {
        prefix.push_back(s);
        covered_size_lists(prefix, remaining - s, s, out);
        prefix.pop_back();
    }
}

void s_multipartite_closed_form(SuiteReport& rep, long long trials,
                                std::mt19937_64& rng, int jobs) {
    std::vector<std::vector<int>> lists;
    std::vector<int> prefix;
    covered_size_lists(prefix, 7, 1, lists);
    for (long long i = 0; i < trials; ++i) {
        int k = rand_between(rng, 2, 4);
        std::vector<int> sizes;
        for (int j = 0; j < k; ++j) sizes.push_back(rand_between(rng, 1, 3));
        bool has_one = std::find(sizes.begin(), sizes.end(), 1) != sizes.end();
        if (has_one && k == 2) {
            ++rep.skipped;  // outside the closed form's coverage
            continue;
        }
        lists.push_back(sizes);
    }
    for (const auto& sizes : lists) {
        Graph g = complete_multipartite(sizes);
        for (const auto& a : groups_from_three()) {
            auto closed = complete_multipartite_spectrum(sizes, a);
            auto brute = brute_force_spectrum(g, a, kDefaultBudget, jobs);
            ++rep.cases;
            if (closed.constants != brute.constants)
                add_failure(rep, g, a,
                            "multipartite closed form " +
                                constants_string(brute.constants),
                            constants_string(closed.constants));
        }
    }
}

void s_corona_closed_form(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                          int jobs) {
    const std::vector<Graph> hs{complete(1), path(2), path(3), cycle(3)};
    std::vector<std::pair<int, std::vector<int>>> instances;  // (h index, sizes)
    for (int hi = 0; hi < 4; ++hi) {
        const int k = hs[hi].vertex_count();
        std::vector<int> sizes(k, 2);
        while (true) {
            int total = k;
            for (int s : sizes) total += s;
            if (total <= 9) instances.emplace_back(hi, sizes);
            int i = k - 1;
            while (i >= 0 && sizes[i] == 3) sizes[i--] = 2;
            if (i < 0) break;
            ++sizes[i];
        }
    }
    for (long long t = 0; t < trials; ++t) {
        int hi = rand_between(rng, 0, 3);
        const int k = hs[hi].vertex_count();
        std::vector<int> sizes;
        int total = k;
        for (int j = 0; j < k; ++j) {
            sizes.push_back(rand_between(rng, 2, 3));
            total += sizes.back();
        }
        if (total > 9) {
            ++rep.skipped;
            continue;
        }
        instances.emplace_back(hi, sizes);
    }
    for (const auto& [hi, sizes] : instances) {
        std::vector<Graph> blocks;
        for (int s : sizes) blocks.push_back(empty_graph(s));
        Graph g = generalized_corona(hs[hi], blocks);
        for (const auto& a : groups_from_three()) {
            auto closed = corona_spectrum(hs[hi], sizes, a);
            auto brute = brute_force_spectrum(g, a, kDefaultBudget, jobs);
            ++rep.cases;
            if (closed.constants != brute.constants)
                add_failure(rep, g, a,
                            "corona closed form " + constants_string(brute.constants),
                            constants_string(closed.constants));
        }
    }
}

void s_path_join_zero(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                      int jobs) {
    AbelianGroup z3({3});
    std::vector<std::pair<int, std::vector<int>>> instances;
    for (int k = 2; k <= 5; ++k) {
        std::vector<int> sizes(k, 1);
        while (true) {
            int total = 0;
            for (int s : sizes) total += s;
            if (total <= 8) instances.emplace_back(k, sizes);
            int i = k - 1;
            while (i >= 0 && sizes[i] == 3) sizes[i--] = 1;
            if (i < 0) break;
            ++sizes[i];
        }
    }
    for (long long t = 0; t < trials; ++t) {
        int k = rand_between(rng, 2, 5);
        std::vector<int> sizes;
        int total = 0;
        for (int j = 0; j < k; ++j) {
            sizes.push_back(rand_between(rng, 1, 3));
            total += sizes.back();
        }
        if (total > 8) {
            ++rep.skipped;
            continue;
        }
        instances.emplace_back(k, sizes);
    }
    for (const auto& [k, sizes] : instances) {
        std::vector<Graph> blocks;
        for (int s : sizes) blocks.push_back(empty_graph(s));
        Graph g = h_join(path(k), blocks);
        bool predicted = path_join_contains_zero(k, sizes, z3);
        auto brute = brute_force_spectrum(g, z3, kDefaultBudget, jobs);
        ++rep.cases;
        if (predicted != brute.contains(z3.zero())) {
            add_failure(rep, g, z3,
                        std::string("0 in spectrum: ") + (predicted ? "yes" : "no"),
                        constants_string(brute.constants));
            continue;
        }
        if (predicted) {
            Labeling l = path_join_zero_labeling(k, sizes, z3);
            auto mu = magic_constant(g, z3, l);
            if (!mu || !mu->is_zero())
                add_failure(rep, g, z3, "constructed labeling has constant 0",
                            mu ? to_string(*mu) : "not magic");
        }
    }
}

void s_inflation_invariance(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                            int jobs) {
    // Joining empty blocks over a complete bipartite pattern collapses to
    // two twin classes, so the ring-join fixture takes two counts.
    std::vector<std::pair<Graph, std::vector<int>>> instances{
        {cycle(4), {1, 0}},
        {complete_multipartite({2, 3}), {0, 2}},
        {complete_multipartite({2, 2}), {2, 1}},
        {c4_join_2322(), {1, 2}},
    };
    for (long long t = 0; t < trials; ++t) {
        // Joining empty blocks of size >= 2 over a connected pattern keeps
        // every twin class at two or more members.
        Graph pattern = random_connected(rng, 2, 4);
        std::vector<Graph> blocks;
        for (int i = 0; i < pattern.vertex_count(); ++i)
            blocks.push_back(empty_graph(rand_between(rng, 2, 3)));
        Graph g = h_join(pattern, blocks);
        std::vector<int> extra;
        for (std::size_t i = 0; i < twin_classes(g).classes.size(); ++i)
            extra.push_back(static_cast<int>(rand_below(rng, 3)));
        instances.emplace_back(std::move(g), std::move(extra));
    }
    long long index = 0;
    for (const auto& [g, extra] : instances) {
        const AbelianGroup a =
            index++ % 2 == 0 ? AbelianGroup({3}) : AbelianGroup({2, 2});
        Graph grown = inflate(g, extra);
        auto base = spectrum(g, a, Strategy::Auto, kDefaultBudget, jobs);
        auto after = spectrum(grown, a, Strategy::Auto, kDefaultBudget, jobs);
        ++rep.cases;
        if (base.constants != after.constants)
            add_failure(rep, g, a,
                        "spectrum unchanged by class inflation: " +
                            constants_string(base.constants),
                        constants_string(after.constants));
    }
}

void s_tensor_zero(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                   int jobs) {
    {
        // Fixed case: all-2 labels on a triangle over Z4 sum to 0 on every
        // neighborhood; the product with an edge keeps that property.
        AbelianGroup z4({4});
        Graph g1 = cycle(3);
        Labeling l1{std::vector<GroupElement>(3, GroupElement{{2}})};
        Labeling lifted = tensor_zero_labeling(g1, z4, l1, {complete(2)});
        Graph product = tensor(g1, complete(2));
        auto mu = magic_constant(product, z4, lifted);
        ++rep.cases;
        if (!mu || !mu->is_zero())
            add_failure(rep, product, z4, "lifted labeling has constant 0",
                        mu ? to_string(*mu) : "not magic");
    }
    for (long long t = 0; t < trials; ++t) {
        const AbelianGroup a = t % 2 == 0 ? AbelianGroup({3}) : AbelianGroup({4});
        Graph pattern = random_connected(rng, 2, 4);
        std::vector<Graph> blocks;
        for (int i = 0; i < pattern.vertex_count(); ++i)
            blocks.push_back(empty_graph(rand_between(rng, 2, 3)));
        Graph g1 = h_join(pattern, blocks);
        auto res = spectrum(g1, a, Strategy::Auto, kDefaultBudget, jobs);
        ++rep.cases;
        auto it = res.witnesses.find(a.zero());
        if (it == res.witnesses.end()) {
            add_failure(rep, g1, a, "0 in spectrum (all twin classes >= 2)",
                        constants_string(res.constants));
            continue;
        }
        Labeling lifted = tensor_zero_labeling(g1, a, it->second, {complete(2)});
        Graph product = tensor(g1, complete(2));
        auto mu = magic_constant(product, a, lifted);
        if (!mu || !mu->is_zero())
            add_failure(rep, product, a, "lifted labeling has constant 0",
                        mu ? to_string(*mu) : "not magic");
    }
}

void s_universality(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                    int jobs) {
    AbelianGroup z3({3});
    std::vector<NamedGraph> cases;
    for (auto& nc : fixtures())
        if (nc.graph.vertex_count() <= 6) cases.push_back(nc);
    for (long long i = 0; i < trials; ++i)
        cases.push_back({"random-" + std::to_string(i),
                         random_graph(rand_between(rng, 2, 6), 0.5, rng())});
    for (const auto& [name, g] : cases) {
        Graph grown = embed_in_gvm(g);
        ++rep.cases;
        if (!all_degrees_even(grown)) {
            add_failure(rep, g, z3, "embedding has all even degrees",
                        "odd degree present");
            continue;
        }
        for (int m : twin_classes(grown).multiplicities)
            if (m % 2 != 0) {
                add_failure(rep, g, z3, "embedding has even twin classes",
                            "class of size " + std::to_string(m));
                break;
            }
        bool induced = true;
        for (int u = 0; u < g.vertex_count() && induced; ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (g.adjacent(u, v) != grown.adjacent(u, v)) {
                    induced = false;
                    break;
                }
        if (!induced) {
            add_failure(rep, g, z3, "input is induced on its original indices",
                        "adjacency changed");
            continue;
        }
        auto res = spectrum(grown, z3, Strategy::Auto, kDefaultBudget, jobs);
        if (!res.contains(z3.zero()))
            add_failure(rep, g, z3, "0 in spectrum of the embedding",
                        constants_string(res.constants));
    }
}

void s_tensor_degree_law(SuiteReport& rep, long long trials, std::mt19937_64& rng,
                         int /*jobs*/) {
    std::vector<std::pair<Graph, Graph>> pairs{
        {cycle(3), complete(2)}, {complete(2), complete(2)}, {path(3), cycle(4)}};
    for (long long i = 0; i < trials; ++i)
        pairs.emplace_back(random_graph(rand_between(rng, 2, 6), 0.5, rng()),
                           random_graph(rand_between(rng, 2, 6), 0.5, rng()));
    for (const auto& [g1, g2] : pairs) {
        Graph t = tensor(g1, g2);
        ++rep.cases;
        bool ok = true;
        for (int u = 0; u < g1.vertex_count() && ok; ++u)
            for (int v = 0; v < g2.vertex_count(); ++v)
                if (t.degree(u * g2.vertex_count() + v) != g1.degree(u) * g2.degree(v)) {
                    add_failure(rep, t, "-", "product degrees multiply",
                                "vertex (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
                    ok = false;
                    break;
                }
        if (!ok) continue;
        bool expect = all_degrees_even(g1) || all_degrees_even(g2);
        if (all_degrees_even(t) != expect)
            add_failure(rep, t, "-", "product all-even iff some factor all-even",
                        expect ? "factor even, product odd" : "product even");
    }
}

using SuiteFn = void (*)(SuiteReport&, long long, std::mt19937_64&, int);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"symmetry", s_symmetry},
        {"pendant-zero", s_pendant_zero},
        {"z2-eulerian", s_z2_eulerian},
        {"zp-saturation", s_zp_saturation},
        {"subgroup-shortcut", s_subgroup_shortcut},
        {"reduced-equivalence", s_reduced_equivalence},
        {"cycle-closed-form", s_cycle_closed_form},
        {"multipartite-closed-form", s_multipartite_closed_form},
        {"corona-closed-form", s_corona_closed_form},
        {"path-join-zero", s_path_join_zero},
        {"inflation-invariance", s_inflation_invariance},
        {"tensor-zero", s_tensor_zero},
        {"universality", s_universality},
        {"tensor-degree-law", s_tensor_degree_law},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1 || n > 12)
        throw domain_error("random_graph needs 1 <= n <= 12, got " + std::to_string(n));
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw domain_error("random_graph needs 0 <= edge_prob <= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit_real(rng) < edge_prob) edges.emplace_back(u, v);
        Graph g = Graph::build(n, edges);
        if (!has_isolated_vertex(g)) return g;
    }
    throw domain_error("random_graph: isolated vertices persisted after 100 draws");
}

SuiteReport run_suite(const std::string& name, long long trials, std::uint64_t seed,
                      int jobs) {
    if (trials < 0) throw domain_error("trials must be non-negative");
    if (name == "all") {
        SuiteReport merged;
        merged.suite = "all";
        for (const auto& [sub, fn] : suite_table()) {
            SuiteReport r = run_suite(sub, trials, seed, jobs);
            merged.cases += r.cases;
            merged.skipped += r.skipped;
            merged.failures.insert(merged.failures.end(), r.failures.begin(),
                                   r.failures.end());
        }
        std::sort(merged.failures.begin(), merged.failures.end(),
                  [](const SuiteFailure& x, const SuiteFailure& y) {
                      return std::tie(x.graph, x.group, x.expected, x.observed) <
                             std::tie(y.graph, y.group, y.expected, y.observed);
                  });
        return merged;
    }

    std::uint64_t salt = 0;
    SuiteFn fn = nullptr;
    for (const auto& [sub, f] : suite_table()) {
        ++salt;
        if (sub == name) {
            fn = f;
            break;
        }
    }
    if (!fn) throw domain_error("unknown suite '" + name + "'");

    SuiteReport rep;
    rep.suite = name;
    std::mt19937_64 rng(splitmix64(seed ^ (salt * 0x9e3779b97f4a7c15ULL)));
    fn(rep, trials, rng, jobs);
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const SuiteFailure& x, const SuiteFailure& y) {
                  return std::tie(x.graph, x.group, x.expected, x.observed) <
                         std::tie(y.graph, y.group, y.expected, y.observed);
              });
    return rep;
}

void set_fault_injection(bool enabled) { g_fault.store(enabled); }

}  // namespace gvm::verify
