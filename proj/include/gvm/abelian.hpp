#pragma once

// Exact arithmetic and structural predicates for finite abelian groups
// presented as explicit products of cyclic groups, Z_{m1} x ... x Z_{mk}.
// Presentations are not normalized: V4 and Z2xZ2 denote the same value,
// but Z6 and Z2xZ3 are distinct (isomorphic) values.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gvm {

// Element of a product group, stored as componentwise-reduced residues.
// The all-zeros tuple is the identity. Canonical order is lexicographic.
struct GroupElement {
    std::vector<int> residues;

    bool is_zero() const {
        for (int r : residues)
            if (r != 0) return false;
        return true;
    }
    auto operator<=>(const GroupElement&) const = default;
};

class AbelianGroup {
public:
    // Every modulus must be >= 2, so the order is >= 2.
    explicit AbelianGroup(std::vector<int> moduli);

    const std::vector<int>& moduli() const { return moduli_; }
    long long order() const { return order_; }
    int rank() const { return static_cast<int>(moduli_.size()); }

    GroupElement zero() const;

    // Elements indexed 0..order-1 in canonical order; element_at(0) is 0.
    GroupElement element_at(long long index) const;
    long long index_of(const GroupElement& x) const;

    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement neg(const GroupElement& x) const;
    GroupElement scalar_mul(long long k, const GroupElement& x) const;

    // Least k >= 1 with k*x = 0; always divides order().
    long long element_order(const GroupElement& x) const;

    // True iff some element has order exactly p (p must be prime). For
    // small groups the structural answer is cross-checked against a full
    // scan of element orders and against divisibility of the group order.
    bool has_element_of_prime_order(long long p) const;

    // Index-level arithmetic used by the labeling solvers; backed by a
    // Cayley table for small groups, componentwise otherwise.
    long long add_index(long long i, long long j) const;
    long long neg_index(long long i) const;

    bool is_cyclic() const { return moduli_.size() == 1; }
    bool is_prime_cyclic() const;
    bool is_klein_four() const { return moduli_ == std::vector<int>{2, 2}; }

    // Unit test for cyclic Z_m only: residues coprime to m.
    bool is_unit(long long a) const;

    bool operator==(const AbelianGroup& other) const {
        return moduli_ == other.moduli_;
    }

private:
    void check_member(const GroupElement& x) const;

    std::vector<int> moduli_;
    long long order_ = 0;
    std::vector<std::uint16_t> add_table_;  // empty when the group is large
    std::vector<std::uint16_t> neg_table_;
};

// Grammar (letters case-insensitive): `V4` | `Z<digits>` ('x' `Z<digits>`)*
// with every modulus >= 2. `V4` is an alias for Z2xZ2.
AbelianGroup parse_group(std::string_view text);

std::string to_string(const AbelianGroup& a);

// Elements serialize as comma-separated residues in parentheses: (1,0).
std::string to_string(const GroupElement& x);

// Decides whether `target` is a sum of `n` nonzero elements of `a`, and if
// so returns one such list of length n. For |A| >= 3 and n >= 2 the answer
// is always yes; in Z2 the sum of n nonzero elements is forced to n mod 2.
std::pair<bool, std::vector<GroupElement>> sum_representable(
    const AbelianGroup& a, const GroupElement& target, long long n);

// Nonempty and closed under addition; closure suffices in a finite group,
// so identity membership and negation-closure follow.
bool is_subgroup(const AbelianGroup& a,
                 const std::vector<GroupElement>& elements);

bool is_prime(long long n);

}  // namespace gvm
