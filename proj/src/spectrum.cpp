#include "gvm/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gvm/errors.hpp"

namespace gvm {

namespace {

// base^exp, saturating at cap+1 so callers can compare against cap safely.
long long pow_saturating(long long base, long long exp, long long cap) {
    long long acc = 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && acc > cap / base) return cap + 1;
        acc *= base;
    }
    return acc;
}

void require_no_isolated_vertex(const Graph& g) {
    if (has_isolated_vertex(g))
        throw domain_error(
            "spectrum is undefined for graphs with isolated vertices "
            "(the empty neighbor sum would force mu = 0 vacuously)");
}

// Weight check over a constraint graph: given per-vertex element indices,
// returns the common neighbor-sum index, or -1 on the first mismatch.
// Vertices are visited by descending degree so mismatches surface early.
class WeightChecker {
public:
    WeightChecker(const Graph& g, const AbelianGroup& a) : group_(&a) {
        const int n = g.vertex_count();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int u, int v) {
            if (g.degree(u) != g.degree(v)) return g.degree(u) > g.degree(v);
            return u < v;
        });
        adj_.reserve(n);
        for (int v : order_) adj_.push_back(g.neighbors(v));
    }

    long long mu_of(const std::vector<long long>& labels) const {
        long long mu = -1;
        bool first = true;
        for (const auto& nbrs : adj_) {
            long long w = 0;
            for (int u : nbrs) w = group_->add_index(w, labels[u]);
            if (first) {
                mu = w;
                first = false;
            } else if (w != mu) {
                return -1;
            }
        }
        return mu;
    }

private:
    const AbelianGroup* group_;
    std::vector<int> order_;
    std::vector<std::vector<int>> adj_;
};

struct SearchHits {
    std::map<long long, std::vector<long long>> first_by_mu;  // mu -> labels
    long long examined = 0;
};

// Enumerates all assignments of per-slot element indices, where slot i
// ranges over [offsets[i], offsets[i] + sizes[i]). Assignments are visited
// in lexicographic order; with jobs > 1 the rank space is partitioned and
// per-mu minima are merged, which reproduces the sequential result.
SearchHits enumerate_assignments(const std::vector<long long>& sizes,
                                 const std::vector<long long>& offsets,
                                 long long total, const WeightChecker& checker,
                                 int jobs) {
    const int k = static_cast<int>(sizes.size());

    auto run_range = [&](long long lo, long long hi, SearchHits& out) {
        std::vector<long long> digit(k, 0), labels(k, 0);
        long long r = lo;
        for (int i = k - 1; i >= 0; --i) {
            digit[i] = r % sizes[i];
            r /= sizes[i];
        }
        for (long long rank = lo; rank < hi; ++rank) {
            for (int i = 0; i < k; ++i) labels[i] = digit[i] + offsets[i];
            long long mu = checker.mu_of(labels);
            ++out.examined;
            if (mu >= 0) out.first_by_mu.try_emplace(mu, labels);
            for (int i = k - 1; i >= 0; --i) {
                if (++digit[i] < sizes[i]) break;
                digit[i] = 0;
            }
        }
    };

    if (jobs < 2 || total < 1024) {
        SearchHits hits;
        run_range(0, total, hits);
        return hits;
    }

    jobs = static_cast<int>(std::min<long long>(jobs, total));
    std::vector<SearchHits> partial(jobs);
    std::vector<std::thread> workers;
    const long long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        long long lo = w * chunk;
        long long hi = std::min(total, lo + chunk);
        workers.emplace_back(run_range, lo, hi, std::ref(partial[w]));
    }
    for (auto& t : workers) t.join();

    SearchHits merged;
    for (const auto& p : partial) {
        merged.examined += p.examined;
        for (const auto& [mu, labels] : p.first_by_mu) {
            auto it = merged.first_by_mu.find(mu);
            if (it == merged.first_by_mu.end() || labels < it->second)
                merged.first_by_mu.insert_or_assign(mu, labels);
        }
    }
    return merged;
}

// Sorts constants, fills the subgroup and connectivity verdicts, and
// re-evaluates every witness against its claimed constant.
void finalize(SpectrumResult& res, const Graph& g) {
    std::sort(res.constants.begin(), res.constants.end());
    res.constants.erase(std::unique(res.constants.begin(), res.constants.end()),
                        res.constants.end());
    res.is_subgroup = is_subgroup(res.group, res.constants);
    res.disconnected = !is_connected(g);
    for (const auto& [c, l] : res.witnesses) {
        auto mu = magic_constant(g, res.group, l);
        if (!mu || *mu != c)
            throw std::logic_error("stored witness fails to achieve its constant " +
                                   to_string(c));
        if (!res.contains(c))
            throw std::logic_error("witness constant missing from spectrum");
    }
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Reduced: return "reduced";
        case Method::ClosedForm: return "closed-form";
    }
    return "?";
}

bool SpectrumResult::contains(const GroupElement& c) const {
    return std::binary_search(constants.begin(), constants.end(), c);
}

GroupElement vertex_weight(const Graph& g, const AbelianGroup& a,
                           const Labeling& l, int v) {
    if (static_cast<int>(l.values.size()) != g.vertex_count())
        throw domain_error("labeling covers " + std::to_string(l.values.size()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    GroupElement w = a.zero();
    for (int u : g.neighbors(v)) w = a.add(w, l.values[u]);
    return w;
}

std::optional<GroupElement> magic_constant(const Graph& g, const AbelianGroup& a,
                                           const Labeling& l) {
    if (static_cast<int>(l.values.size()) != g.vertex_count())
        throw domain_error("labeling covers " + std::to_string(l.values.size()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    for (const auto& value : l.values) {
        a.index_of(value);  // membership
        if (value.is_zero()) return std::nullopt;
    }
    GroupElement mu = vertex_weight(g, a, l, 0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (vertex_weight(g, a, l, v) != mu) return std::nullopt;
    return mu;
}

SpectrumResult brute_force_spectrum(const Graph& g, const AbelianGroup& a,
                                    long long budget, int jobs) {
    require_no_isolated_vertex(g);
    const int n = g.vertex_count();
    const long long total = pow_saturating(a.order() - 1, n, budget);
    if (total > budget)
        throw budget_error("brute force needs (" + std::to_string(a.order() - 1) +
                           ")^" + std::to_string(n) + " labelings, over the budget of " +
                           std::to_string(budget) + "; try the reduced solver (redspec)");

    WeightChecker checker(g, a);
    std::vector<long long> sizes(n, a.order() - 1), offsets(n, 1);
    SearchHits hits = enumerate_assignments(sizes, offsets, total, checker, jobs);

    SpectrumResult res{a, {}, Method::Brute, hits.examined, {}, false, false};
    for (const auto& [mu, labels] : hits.first_by_mu) {
        GroupElement c = a.element_at(mu);
        Labeling witness;
        witness.values.reserve(n);
        for (long long idx : labels) witness.values.push_back(a.element_at(idx));
        res.constants.push_back(c);
        res.witnesses.emplace(std::move(c), std::move(witness));
    }
    finalize(res, g);
    return res;
}

SpectrumResult reduced_spectrum(const Graph& g, const AbelianGroup& a,
                                long long budget, int jobs) {
    if (a.order() < 3)
        throw domain_error(
            "the reduced solver requires a group with at least 3 elements "
            "(class sums cannot be lifted over Z2); use brute force");
    require_no_isolated_vertex(g);

    ReducedGraph rg = twin_classes(g);
    const int t = rg.quotient.vertex_count();
    if (pow_saturating(a.order(), t, budget) > budget)
        throw budget_error("reduced search needs " + std::to_string(a.order()) + "^" +
                           std::to_string(t) + " assignments, over the budget of " +
                           std::to_string(budget));

    // Classes with >= 2 members may carry sum 0; singletons may not.
    std::vector<long long> sizes(t), offsets(t);
    long long total = 1;
    for (int i = 0; i < t; ++i) {
        sizes[i] = rg.multiplicities[i] >= 2 ? a.order() : a.order() - 1;
        offsets[i] = rg.multiplicities[i] >= 2 ? 0 : 1;
        total *= sizes[i];
    }

    WeightChecker checker(rg.quotient, a);
    SearchHits hits = enumerate_assignments(sizes, offsets, total, checker, jobs);

    SpectrumResult res{a, {}, Method::Reduced, hits.examined, {}, false, false};
    for (const auto& [mu, sums] : hits.first_by_mu) {
        GroupElement c = a.element_at(mu);
        Labeling witness;
        witness.values.assign(g.vertex_count(), a.zero());
        for (int i = 0; i < t; ++i) {
            auto [ok, parts] =
                sum_representable(a, a.element_at(sums[i]), rg.multiplicities[i]);
            if (!ok) throw std::logic_error("class sum lift failed unexpectedly");
            for (std::size_t j = 0; j < rg.classes[i].size(); ++j)
                witness.values[rg.classes[i][j]] = parts[j];
        }
        res.constants.push_back(c);
        res.witnesses.emplace(std::move(c), std::move(witness));
    }
    finalize(res, g);
    return res;
}

SpectrumResult spectrum(const Graph& g, const AbelianGroup& a, Strategy strategy,
                        long long budget, int jobs) {
    switch (strategy) {
        case Strategy::Brute: return brute_force_spectrum(g, a, budget, jobs);
        case Strategy::Reduced: return reduced_spectrum(g, a, budget, jobs);
        case Strategy::Auto: break;
    }
    if (a.order() >= 3) {
        // Saturating at the budget keeps the comparison exact whenever at
        // least one strategy is actually runnable.
        long long t = twin_classes(g).quotient.vertex_count();
        long long reduced_cost = pow_saturating(a.order(), t, budget);
        long long brute_cost = pow_saturating(a.order() - 1, g.vertex_count(), budget);
        if (reduced_cost < brute_cost) return reduced_spectrum(g, a, budget, jobs);
    }
    return brute_force_spectrum(g, a, budget, jobs);
}

SpectrumResult z2_spectrum(const Graph& g) {
    require_no_isolated_vertex(g);
    AbelianGroup z2({2});
    SpectrumResult res{z2, {}, Method::ClosedForm, 0, {}, false, false};
    if (all_degrees_same_parity(g)) {
        // The all-ones labeling is forced; its weight at v is deg(v) mod 2.
        GroupElement c{{g.degree(0) % 2}};
        Labeling ones{std::vector<GroupElement>(g.vertex_count(), GroupElement{{1}})};
        res.constants.push_back(c);
        res.witnesses.emplace(c, std::move(ones));
        res.labelings_examined = 1;
    }
    finalize(res, g);
    return res;
}

SpectrumResult cycle_spectrum(int n, const AbelianGroup& a) {
    Graph g = cycle(n);
    SpectrumResult res{a, {}, Method::ClosedForm, 0, {}, false, false};

    if (n % 4 == 0) {
        // Any labeling with period-4 pattern (x, x, y, y) has weight x+y
        // everywhere, and every magic labeling arises that way.
        for (long long xi = 1; xi < a.order(); ++xi)
            for (long long yi = 1; yi < a.order(); ++yi) {
                GroupElement x = a.element_at(xi), y = a.element_at(yi);
                GroupElement c = a.add(x, y);
                if (res.witnesses.count(c)) continue;
                Labeling l;
                l.values.reserve(n);
                for (int v = 0; v < n; ++v)
                    l.values.push_back(v % 4 < 2 ? x : y);
                res.constants.push_back(c);
                res.witnesses.emplace(std::move(c), std::move(l));
            }
    } else {
        // Labels are forced constant on the period-4 orbits, which for
        // n not divisible by 4 collapse to an all-equal labeling family
        // with weights 2x.
        for (long long xi = 1; xi < a.order(); ++xi) {
            GroupElement x = a.element_at(xi);
            GroupElement c = a.add(x, x);
            if (res.witnesses.count(c)) continue;
            Labeling l{std::vector<GroupElement>(n, x)};
            res.constants.push_back(c);
            res.witnesses.emplace(std::move(c), std::move(l));
        }
    }
    res.labelings_examined = static_cast<long long>(res.witnesses.size());
    finalize(res, g);
    return res;
}

SpectrumResult complete_multipartite_spectrum(const std::vector<int>& sizes,
                                              const AbelianGroup& a) {
    const int k = static_cast<int>(sizes.size());
    if (k < 2) throw domain_error("complete multipartite form needs k >= 2 parts");
    for (int s : sizes)
        if (s < 1) throw domain_error("partite set size must be >= 1");
    if (a.order() < 3)
        throw not_covered_error(
            "complete multipartite closed form needs |A| >= 3; use brute force");

    bool has_singleton = std::find(sizes.begin(), sizes.end(), 1) != sizes.end();
    bool all_at_least_two = !has_singleton;
    if (has_singleton && k == 2)
        throw not_covered_error(
            "complete bipartite with a singleton side is not covered; use brute force");

    Graph g = complete_multipartite(sizes);
    SpectrumResult res{a, {}, Method::ClosedForm, 0, {}, false, false};

    // Each partite set carries the same label sum s; weights are (k-1)s.
    // A singleton part pins s to its own nonzero label.
    long long first = all_at_least_two ? 0 : 1;
    for (long long si = first; si < a.order(); ++si) {
        GroupElement s = a.element_at(si);
        GroupElement c = a.scalar_mul(k - 1, s);
        if (res.witnesses.count(c)) continue;
        Labeling l;
        for (int part : sizes) {
            auto [ok, parts] = sum_representable(a, s, part);
            if (!ok) throw std::logic_error("partite sum lift failed unexpectedly");
            l.values.insert(l.values.end(), parts.begin(), parts.end());
        }
        res.constants.push_back(c);
        res.witnesses.emplace(std::move(c), std::move(l));
    }
    res.labelings_examined = static_cast<long long>(res.witnesses.size());
    finalize(res, g);
    return res;
}

SpectrumResult corona_spectrum(const Graph& h, const std::vector<int>& sizes,
                               const AbelianGroup& a) {
    if (static_cast<int>(sizes.size()) != h.vertex_count())
        throw domain_error("corona form needs one block size per vertex of H");
    for (int s : sizes)
        if (s <= 1)
            throw not_covered_error(
                "corona closed form needs every block size > 1; use brute force");
    if (a.order() < 3)
        throw not_covered_error("corona closed form needs |A| >= 3; use brute force");

    const int k = h.vertex_count();
    std::vector<Graph> blocks;
    blocks.reserve(sizes.size());
    for (int s : sizes) blocks.push_back(empty_graph(s));
    Graph g = generalized_corona(h, blocks);

    SpectrumResult res{a, {}, Method::ClosedForm, 0, {}, false, false};
    // Block vertices are pendant, so 0 is excluded; every nonzero a is hit
    // by labeling H with a and block i to sum to -(deg_H(i)-1)a.
    for (long long ai = 1; ai < a.order(); ++ai) {
        GroupElement c = a.element_at(ai);
        Labeling l{std::vector<GroupElement>(k, c)};
        for (int i = 0; i < k; ++i) {
            GroupElement target = a.scalar_mul(-(h.degree(i) - 1), c);
            auto [ok, parts] = sum_representable(a, target, sizes[i]);
            if (!ok) throw std::logic_error("corona block lift failed unexpectedly");
            l.values.insert(l.values.end(), parts.begin(), parts.end());
        }
        res.constants.push_back(c);
        res.witnesses.emplace(std::move(c), std::move(l));
    }
    res.labelings_examined = static_cast<long long>(res.witnesses.size());
    finalize(res, g);
    return res;
}

namespace {

void check_path_join_args(int k, const std::vector<int>& sizes, const AbelianGroup& a) {
    if (k < 2) throw domain_error("path join needs k >= 2 classes");
    if (static_cast<int>(sizes.size()) != k)
        throw domain_error("path join needs one size per class");
    for (int s : sizes)
        if (s < 1) throw domain_error("class sizes must be >= 1");
    if (a.order() < 3) throw domain_error("path join zero test needs |A| >= 3");
}

}  // namespace

bool path_join_contains_zero(int k, const std::vector<int>& sizes,
                             const AbelianGroup& a) {
    check_path_join_args(k, sizes, a);
    if (k % 2 == 0) {
        for (int s : sizes)
            if (s <= 1) return false;
        return true;
    }
    for (int i = 2; i < k; i += 2)  // 1-based even positions
        if (sizes[i - 1] <= 1) return false;
    return true;
}

Labeling path_join_zero_labeling(int k, const std::vector<int>& sizes,
                                 const AbelianGroup& a) {
    if (!path_join_contains_zero(k, sizes, a))
        throw domain_error("this path join admits no magic labeling with constant 0");

    bool all_big = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 1; });
    // Class sums: all zero when every class can absorb 0; otherwise the
    // alternating odd-position pattern -a, 0, +a, 0, ... cancels along the
    // path while keeping singleton classes nonzero.
    GroupElement unit = a.element_at(1);
    std::vector<GroupElement> class_sum(k, a.zero());
    if (!all_big) {
        for (int i = 1; i <= k; i += 2)
            class_sum[i - 1] = (i % 4 == 1) ? a.neg(unit) : unit;
    }

    Labeling l;
    for (int i = 0; i < k; ++i) {
        auto [ok, parts] = sum_representable(a, class_sum[i], sizes[i]);
        if (!ok) throw std::logic_error("path join class lift failed unexpectedly");
        l.values.insert(l.values.end(), parts.begin(), parts.end());
    }
    return l;
}

SubgroupReport subgroup_report(const Graph& g, const AbelianGroup& a,
                               long long budget, int jobs) {
    SpectrumResult res = spectrum(g, a, Strategy::Auto, budget, jobs);
    SubgroupReport report{res, res.is_subgroup, false};
    report.shortcut_used = a.is_prime_cyclic() || a.is_klein_four();
    if (!res.constants.empty()) {
        if (report.shortcut_used && res.contains(a.zero()) != res.is_subgroup)
            throw std::logic_error(
                "zero-membership shortcut disagrees with the closure check");
        if (has_pendant(g) && res.is_subgroup)
            throw std::logic_error(
                "spectrum of a graph with a pendant vertex cannot be a subgroup");
    }
    return report;
}

Labeling scale_labeling(const Graph& g, const AbelianGroup& a, const Labeling& l,
                        long long unit) {
    if (!a.is_cyclic())
        throw domain_error("label scaling is only defined over cyclic groups");
    if (!a.is_unit(unit))
        throw domain_error(std::to_string(unit) + " is not a unit modulo " +
                           std::to_string(a.moduli()[0]));
    if (!magic_constant(g, a, l))
        throw domain_error("scale_labeling requires a magic labeling");
    Labeling out;
    out.values.reserve(l.values.size());
    for (const auto& v : l.values) out.values.push_back(a.scalar_mul(unit, v));
    return out;
}

Labeling negate_labeling(const Graph& g, const AbelianGroup& a, const Labeling& l) {
    if (!magic_constant(g, a, l))
        throw domain_error("negate_labeling requires a magic labeling");
    Labeling out;
    out.values.reserve(l.values.size());
    for (const auto& v : l.values) out.values.push_back(a.neg(v));
    return out;
}

Labeling tensor_zero_labeling(const Graph& g1, const AbelianGroup& a,
                              const Labeling& l1, const std::vector<Graph>& factors) {
    if (has_isolated_vertex(g1))
        throw domain_error("tensor factors must have minimum degree >= 1");
    for (const Graph& f : factors)
        if (has_isolated_vertex(f))
            throw domain_error("tensor factors must have minimum degree >= 1");
    auto mu = magic_constant(g1, a, l1);
    if (!mu || !mu->is_zero())
        throw domain_error("tensor_zero_labeling needs a magic labeling with constant 0");

    long long stride = 1;
    for (const Graph& f : factors) {
        stride *= f.vertex_count();
        if (stride * g1.vertex_count() > 10'000'000)
            throw domain_error("tensor product too large to label");
    }
    Labeling out;
    out.values.reserve(static_cast<std::size_t>(stride) * g1.vertex_count());
    for (long long p = 0; p < stride * g1.vertex_count(); ++p)
        out.values.push_back(l1.values[static_cast<std::size_t>(p / stride)]);
    return out;
}

}  // namespace gvm
