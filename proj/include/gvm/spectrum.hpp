#pragma once

// Magic spectra of graphs over finite abelian groups.
//
// A labeling l : V(G) -> A \ {0} is A-vertex magic when every vertex has
// the same neighbor-label sum mu; the spectrum spec(G, A) is the set of
// all mu achievable that way. It is computed three ways here:
//
//   brute_force_spectrum  enumerates every labeling of G directly;
//   reduced_spectrum      enumerates sums per twin class of G, where a
//                         class with >= 2 members may carry sum 0, and
//                         lifts each admitted assignment back to a full
//                         labeling (requires |A| >= 3);
//   closed forms          for cycles, complete multipartite graphs,
//                         coronas over empty graphs, and the Z2 case.
//
// Results carry one witness labeling per constant, a subgroup verdict for
// the constant set, and enough counters to compare strategies.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvm/abelian.hpp"
#include "gvm/graph.hpp"

namespace gvm {

inline constexpr long long kDefaultBudget = 100'000'000;

// Per-vertex nonzero group elements.
struct Labeling {
    std::vector<GroupElement> values;
    auto operator<=>(const Labeling&) const = default;
};

enum class Method { Brute, Reduced, ClosedForm };
enum class Strategy { Auto, Brute, Reduced };

std::string to_string(Method m);

struct SpectrumResult {
    AbelianGroup group;
    std::vector<GroupElement> constants;  // sorted, canonical order
    Method method = Method::Brute;
    long long labelings_examined = 0;
    std::map<GroupElement, Labeling> witnesses;  // one per constant
    bool is_subgroup = false;                    // closure check on constants
    bool disconnected = false;

    bool contains(const GroupElement& c) const;
};

// Sum of neighbor labels; an empty neighborhood sums to 0.
GroupElement vertex_weight(const Graph& g, const AbelianGroup& a,
                           const Labeling& l, int v);

// The common weight when `l` is magic on g (all labels nonzero and all
// vertex weights equal); nullopt otherwise.
std::optional<GroupElement> magic_constant(const Graph& g, const AbelianGroup& a,
                                           const Labeling& l);

// Direct enumeration over (A \ {0})^n labelings in lexicographic order.
// Vertices are weight-checked in descending-degree order and each labeling
// is abandoned at the first mismatched weight. Requires no isolated vertex
// and (|A|-1)^n <= budget. The witness kept per constant is the
// lexicographically first labeling, independent of `jobs`.
SpectrumResult brute_force_spectrum(const Graph& g, const AbelianGroup& a,
                                    long long budget = kDefaultBudget, int jobs = 1);

// Twin-class search: enumerates class-sum assignments over the reduced
// graph (singleton classes skip 0) and admits mu when every class vertex's
// quotient neighborhood sums to mu. Witnesses are lifted to full labelings
// via sum_representable. Requires |A| >= 3, no isolated vertex, and
// |A|^t <= budget for t twin classes.
SpectrumResult reduced_spectrum(const Graph& g, const AbelianGroup& a,
                                long long budget = kDefaultBudget, int jobs = 1);

// Dispatcher: Auto picks the reduced solver when |A| >= 3 and
// |A|^t < (|A|-1)^n, otherwise brute force. The result is the same either
// way, modulo the choice of witnesses.
SpectrumResult spectrum(const Graph& g, const AbelianGroup& a,
                        Strategy strategy = Strategy::Auto,
                        long long budget = kDefaultBudget, int jobs = 1);

// Over Z2 the all-ones labeling is the only candidate: mixed degree
// parity gives an empty spectrum, all-even gives {0}, all-odd gives {1}.
SpectrumResult z2_spectrum(const Graph& g);

// spec(C_n, A): {a+b : a,b nonzero} when 4 | n, else {2a : a nonzero}.
SpectrumResult cycle_spectrum(int n, const AbelianGroup& a);

// Complete k-partite closed form for |A| >= 3:
//   some part of size 1 and k > 2   ->  {(k-1)a : a nonzero}
//   every part of size >= 2         ->  {(k-1)a : a in A}
// Anything else is not covered and falls back to the search solvers.
SpectrumResult complete_multipartite_spectrum(const std::vector<int>& sizes,
                                              const AbelianGroup& a);

// Spectrum of generalized_corona(h, [empty(size_i)]) with every size > 1
// and |A| >= 3: exactly the nonzero elements, each witnessed by labeling
// the h-vertices a and block i to sum to -(deg_h(i)-1)a.
SpectrumResult corona_spectrum(const Graph& h, const std::vector<int>& sizes,
                               const AbelianGroup& a);

// Whether 0 lies in the spectrum of h_join(path(k), [empty(size_i)]) for
// |A| >= 3: for even k all sizes must exceed 1, for odd k the sizes at
// even positions (1-based) must.
bool path_join_contains_zero(int k, const std::vector<int>& sizes,
                             const AbelianGroup& a);

// A labeling of h_join(path(k), [empty(size_i)]) with constant 0; throws
// when path_join_contains_zero is false.
Labeling path_join_zero_labeling(int k, const std::vector<int>& sizes,
                                 const AbelianGroup& a);

struct SubgroupReport {
    SpectrumResult spectrum;
    bool is_subgroup = false;
    bool shortcut_used = false;  // group was prime cyclic or Klein four
};

// Computes the spectrum and checks the subgroup verdict against the
// zero-membership shortcut (valid over Z_p and V4) and the pendant rule;
// a disagreement is an internal bug and raises logic_error.
SubgroupReport subgroup_report(const Graph& g, const AbelianGroup& a,
                               long long budget = kDefaultBudget, int jobs = 1);

// Multiply every label of a magic labeling by a unit of cyclic Z_m; the
// result is magic with constant unit*mu.
Labeling scale_labeling(const Graph& g, const AbelianGroup& a, const Labeling& l,
                        long long unit);

// Negate every label of a magic labeling; the result has constant -mu.
Labeling negate_labeling(const Graph& g, const AbelianGroup& a, const Labeling& l);

// Given a magic labeling of g1 with constant 0, labels the tensor product
// g1 (x) factors[0] (x) ... by first coordinate, which is again magic with
// constant 0. Every graph involved must have minimum degree >= 1.
Labeling tensor_zero_labeling(const Graph& g1, const AbelianGroup& a,
                              const Labeling& l1, const std::vector<Graph>& factors);

}  // namespace gvm
