#include "gvm/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gvm/errors.hpp"

namespace gvm {

namespace {

// Cayley tables are only worth the memory for small groups.
constexpr long long kTableLimit = 512;

int mod_reduce(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty())
        throw domain_error("abelian group needs at least one cyclic factor");
    order_ = 1;
    for (int m : moduli_) {
        if (m < 2)
            throw domain_error("abelian group modulus must be at least 2, got " +
                               std::to_string(m));
        if (order_ > (1LL << 62) / m)
            throw domain_error("abelian group order overflows");
        order_ *= m;
    }
    if (order_ <= kTableLimit) {
        const int n = static_cast<int>(order_);
        add_table_.resize(static_cast<std::size_t>(n) * n);
        neg_table_.resize(n);
        for (int i = 0; i < n; ++i) {
            GroupElement x = element_at(i);
            neg_table_[i] = static_cast<std::uint16_t>(index_of(neg(x)));
            for (int j = 0; j <= i; ++j) {
                GroupElement y = element_at(j);
                auto s = static_cast<std::uint16_t>(index_of(add(x, y)));
                add_table_[static_cast<std::size_t>(i) * n + j] = s;
                add_table_[static_cast<std::size_t>(j) * n + i] = s;
            }
        }
    }
}

void AbelianGroup::check_member(const GroupElement& x) const {
    if (x.residues.size() != moduli_.size())
        throw domain_error("group element has " + std::to_string(x.residues.size()) +
                           " residues, expected " + std::to_string(moduli_.size()));
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (x.residues[i] < 0 || x.residues[i] >= moduli_[i])
            throw domain_error("residue " + std::to_string(x.residues[i]) +
                               " out of range for Z" + std::to_string(moduli_[i]));
}

GroupElement AbelianGroup::zero() const {
    return GroupElement{std::vector<int>(moduli_.size(), 0)};
}

GroupElement AbelianGroup::element_at(long long index) const {
    if (index < 0 || index >= order_)
        throw domain_error("element index out of range: " + std::to_string(index));
    std::vector<int> r(moduli_.size());
    for (int i = rank() - 1; i >= 0; --i) {
        r[i] = static_cast<int>(index % moduli_[i]);
        index /= moduli_[i];
    }
    return GroupElement{std::move(r)};
}

long long AbelianGroup::index_of(const GroupElement& x) const {
    check_member(x);
    long long idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        idx = idx * moduli_[i] + x.residues[i];
    return idx;
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    check_member(x);
    check_member(y);
    std::vector<int> r(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        r[i] = mod_reduce(static_cast<long long>(x.residues[i]) + y.residues[i],
                          moduli_[i]);
    return GroupElement{std::move(r)};
}

GroupElement AbelianGroup::neg(const GroupElement& x) const {
    check_member(x);
    std::vector<int> r(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        r[i] = mod_reduce(-static_cast<long long>(x.residues[i]), moduli_[i]);
    return GroupElement{std::move(r)};
}

GroupElement AbelianGroup::scalar_mul(long long k, const GroupElement& x) const {
    check_member(x);
    std::vector<int> r(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        r[i] = mod_reduce((k % moduli_[i]) * x.residues[i], moduli_[i]);
    return GroupElement{std::move(r)};
}

long long AbelianGroup::element_order(const GroupElement& x) const {
    check_member(x);
    long long ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        long long comp = moduli_[i] / std::gcd<long long>(moduli_[i], x.residues[i]);
        ord = std::lcm(ord, comp);
    }
    return ord;
}

bool AbelianGroup::has_element_of_prime_order(long long p) const {
    if (!is_prime(p))
        throw domain_error("has_element_of_prime_order requires a prime, got " +
                           std::to_string(p));
    bool structural = false;
    for (int m : moduli_)
        if (m % p == 0) structural = true;

    if (order_ <= 100000) {
        bool scanned = false;
        for (long long i = 0; i < order_ && !scanned; ++i)
            scanned = element_order(element_at(i)) == p;
        bool divides = order_ % p == 0;  // Cauchy
        if (scanned != structural || divides != structural)
            throw std::logic_error("prime-order element scan disagrees with divisibility");
    }
    return structural;
}

long long AbelianGroup::add_index(long long i, long long j) const {
    if (!add_table_.empty())
        return add_table_[static_cast<std::size_t>(i) * order_ + j];
    return index_of(add(element_at(i), element_at(j)));
}

long long AbelianGroup::neg_index(long long i) const {
    if (!neg_table_.empty()) return neg_table_[static_cast<std::size_t>(i)];
    return index_of(neg(element_at(i)));
}

bool AbelianGroup::is_prime_cyclic() const {
    return moduli_.size() == 1 && is_prime(moduli_[0]);
}

bool AbelianGroup::is_unit(long long a) const {
    if (!is_cyclic())
        throw domain_error("units are only defined here for cyclic groups");
    int m = moduli_[0];
    return std::gcd<long long>(mod_reduce(a, m), m) == 1;
}

AbelianGroup parse_group(std::string_view text) {
    // Trim surrounding whitespace; the grammar itself has none.
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view body = text.substr(begin, end - begin);

    if (body.empty()) throw parse_error("empty group spec", 0);

    auto lower = [](char c) {
        return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    };

    if (body.size() == 2 && lower(body[0]) == 'v' && body[1] == '4')
        return AbelianGroup({2, 2});

    std::vector<int> moduli;
    std::size_t pos = 0;
    while (true) {
        std::size_t tok_start = pos;
        if (pos >= body.size() || lower(body[pos]) != 'z')
            throw parse_error("expected 'Z' in group spec '" + std::string(body) +
                                  "' at position " + std::to_string(pos),
                              begin + pos);
        ++pos;
        std::size_t digits = pos;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
            ++pos;
        if (digits == pos)
            throw parse_error("expected digits after 'Z' in group spec '" +
                                  std::string(body) + "' at position " +
                                  std::to_string(pos),
                              begin + pos);
        if (pos - digits > 9)
            throw parse_error("modulus too large in group spec '" + std::string(body) + "'",
                              begin + digits);
        long long m = 0;
        for (std::size_t i = digits; i < pos; ++i) m = m * 10 + (body[i] - '0');
        if (m < 2)
            throw parse_error("modulus must be at least 2 in token '" +
                                  std::string(body.substr(tok_start, pos - tok_start)) +
                                  "'",
                              begin + tok_start);
        moduli.push_back(static_cast<int>(m));
        if (pos == body.size()) break;
        if (lower(body[pos]) != 'x')
            throw parse_error("unexpected character '" + std::string(1, body[pos]) +
                                  "' in group spec '" + std::string(body) + "'",
                              begin + pos);
        ++pos;
    }
    return AbelianGroup(std::move(moduli));
}

std::string to_string(const AbelianGroup& a) {
    std::string out;
    for (std::size_t i = 0; i < a.moduli().size(); ++i) {
        if (i) out += 'x';
        out += 'Z';
        out += std::to_string(a.moduli()[i]);
    }
    return out;
}

std::string to_string(const GroupElement& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.residues.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x.residues[i]);
    }
    out += ')';
    return out;
}

std::pair<bool, std::vector<GroupElement>> sum_representable(
    const AbelianGroup& a, const GroupElement& target, long long n) {
    if (n < 1) throw domain_error("sum_representable needs n >= 1");
    a.index_of(target);  // membership check

    if (n == 1) {
        if (target.is_zero()) return {false, {}};
        return {true, {target}};
    }
    if (a.order() == 2) {
        // The only nonzero element is 1, so the sum of n terms is n mod 2.
        if (target.residues[0] != static_cast<int>(n % 2)) return {false, {}};
        return {true, std::vector<GroupElement>(static_cast<std::size_t>(n),
                                                a.element_at(1))};
    }

    // |A| >= 3: always representable. Greedy: burn slots with the smallest
    // nonzero element, switching only when the final slot would become 0.
    std::vector<GroupElement> witness;
    witness.reserve(static_cast<std::size_t>(n));
    GroupElement remaining = target;
    const GroupElement e1 = a.element_at(1);
    const GroupElement e2 = a.element_at(2);
    for (long long slots = n; slots >= 2; --slots) {
        GroupElement pick = e1;
        if (slots == 2 && remaining == e1) pick = e2;
        witness.push_back(pick);
        remaining = a.add(remaining, a.neg(pick));
    }
    witness.push_back(remaining);
    return {true, std::move(witness)};
}

bool is_subgroup(const AbelianGroup& a, const std::vector<GroupElement>& elements) {
    std::set<GroupElement> s;
    for (const auto& e : elements) {
        a.index_of(e);
        s.insert(e);
    }
    if (s.empty()) return false;
    for (const auto& x : s)
        for (const auto& y : s)
            if (!s.count(a.add(x, y))) return false;
    return true;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace gvm
