#pragma once

/**
 * @file group.hpp
 * @brief Finite groups on dense element indices, conjugacy classes and words in Γⁿ.
 *
 * A FiniteGroup is an immutable handle around a precomputed multiplication table.
 * Elements are indices 0..order-1 and the identity is always 0. Copies share the
 * underlying table. The direct power Γⁿ is never built as a FiniteGroup; GroupWord
 * carries its structure coordinatewise.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace repdual {

using Element = std::uint32_t;

/// Images of 0..d-1; composition is (a·b)(x) = a(b(x)).
using Permutation = std::vector<std::uint32_t>;

/// Limits on every exponential enumeration. All are configurable from the CLI.
struct Caps {
    std::size_t group_order = 5000;        ///< closure size of group_from_generators
    std::size_t code_size = 1'000'000;     ///< closure size of code_from_generators
    std::size_t tuples = 10'000'000;       ///< k^n irrep tuples / class tuples
    std::size_t cosets = 100'000;          ///< |Γ|^n / |H| for the fixed-coset route
    std::size_t universe = 100'000'000;    ///< |Γ|^n when Γ^n has to be enumerated
    unsigned subset_bits = 20;             ///< n for the 2^n subset tables
};

namespace detail {

struct GroupData {
    std::size_t order = 1;
    std::vector<Element> table;  // row-major, table[a * order + b] = a·b
    std::vector<Element> inverse;
    std::vector<unsigned> element_order;
    unsigned exponent = 1;
    std::vector<std::string> labels;
    std::string name;
    std::size_t degree = 0;             // permutation degree, 0 if not a permutation group
    std::vector<Permutation> perms;     // empty unless built from permutations
    std::uint64_t hash = 0;
};

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace detail

class FiniteGroup {
   public:
    /// The trivial group.
    FiniteGroup() : FiniteGroup(make_trivial()) {}

    explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data) : d_(std::move(data)) {}

    std::size_t order() const noexcept { return d_->order; }
    static constexpr Element identity() noexcept { return 0; }

    Element mul(Element a, Element b) const { return d_->table[std::size_t(a) * d_->order + b]; }
    Element inv(Element a) const { return d_->inverse[a]; }
    Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }  // g x g⁻¹

    Element pow(Element g, long long e) const {
        if (e < 0) {
            g = inv(g);
            e = -e;
        }
        Element r = identity();
        while (e > 0) {
            if (e & 1) r = mul(r, g);
            g = mul(g, g);
            e >>= 1;
        }
        return r;
    }

    unsigned element_order(Element g) const { return d_->element_order[g]; }
    unsigned exponent() const noexcept { return d_->exponent; }

    const std::string& label(Element g) const { return d_->labels[g]; }
    const std::vector<std::string>& labels() const noexcept { return d_->labels; }
    const std::string& name() const noexcept { return d_->name; }

    bool is_permutation_group() const noexcept { return !d_->perms.empty(); }
    std::size_t permutation_degree() const noexcept { return d_->degree; }
    const Permutation& permutation(Element g) const { return d_->perms.at(g); }

    std::uint64_t table_hash() const noexcept { return d_->hash; }
    std::span<const Element> table() const noexcept { return d_->table; }

    bool is_abelian() const {
        for (Element a = 0; a < order(); ++a)
            for (Element b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// Exact label match.
    std::optional<Element> find_label(const std::string& label) const {
        for (Element g = 0; g < order(); ++g)
            if (d_->labels[g] == label) return g;
        return std::nullopt;
    }

    /// Same group under a different display name.
    FiniteGroup renamed(std::string name) const {
        auto copy = std::make_shared<detail::GroupData>(*d_);
        copy->name = std::move(name);
        return FiniteGroup(std::move(copy));
    }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.d_ == b.d_ || (a.d_->order == b.d_->order && a.d_->table == b.d_->table);
    }

   private:
    static std::shared_ptr<const detail::GroupData> make_trivial();

    std::shared_ptr<const detail::GroupData> d_;
};

namespace detail {

inline void finish_group(GroupData& d) {
    const std::size_t n = d.order;
    d.inverse.assign(n, 0);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (d.table[a * n + b] == 0) {
                d.inverse[a] = b;
                break;
            }
    d.element_order.assign(n, 1);
    d.exponent = 1;
    for (Element a = 0; a < n; ++a) {
        unsigned ord = 1;
        for (Element x = a; x != 0; x = d.table[x * n + a]) ++ord;
        d.element_order[a] = a == 0 ? 1 : ord;
        d.exponent = std::lcm(d.exponent, d.element_order[a]);
    }
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, n);
    for (Element v : d.table) h = fnv1a(h, v);
    d.hash = h;
}

}  // namespace detail

inline std::shared_ptr<const detail::GroupData> FiniteGroup::make_trivial() {
    static const auto trivial = [] {
        auto d = std::make_shared<detail::GroupData>();
        d->order = 1;
        d->table = {0};
        d->labels = {"e"};
        d->name = "1";
        detail::finish_group(*d);
        return std::shared_ptr<const detail::GroupData>(d);
    }();
    return trivial;
}

// ---------------------------------------------------------------------------
// Permutations

/// Cycle notation on 0-based points, identity is "()".
inline std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = p[j];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

/// Builds a permutation of {0..degree-1} from disjoint or overlapping cycles (composed right to left).
inline Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& c = *it;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree)
                throw InvalidPermutation("point " + std::to_string(c[i]) + " outside 0.." + std::to_string(degree) + ")");
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i] == c[j]) throw InvalidPermutation("point " + std::to_string(c[i]) + " repeated in a cycle");
        }
        if (c.size() < 2) continue;
        Permutation cyc(degree);
        std::iota(cyc.begin(), cyc.end(), 0u);
        for (std::size_t i = 0; i < c.size(); ++i) cyc[c[i]] = c[(i + 1) % c.size()];
        Permutation next(degree);
        for (std::size_t x = 0; x < degree; ++x) next[x] = cyc[p[x]];
        p = std::move(next);
    }
    return p;
}

/// Closure of `generators` under composition. Elements are indexed in BFS order from the
/// identity, applying generators in input order; the identity is index 0.
inline FiniteGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                         std::size_t cap = Caps{}.group_order, std::string name = {}) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.size() != degree)
            throw InvalidPermutation("generator " + std::to_string(i) + " has length " + std::to_string(g.size()) +
                                     ", expected degree " + std::to_string(degree));
        std::vector<bool> hit(degree, false);
        for (auto x : g) {
            if (x >= degree || hit[x])
                throw InvalidPermutation("generator " + std::to_string(i) + " is not a bijection on 0.." +
                                         std::to_string(degree - 1));
            hit[x] = true;
        }
    }

    struct VecHash {
        std::size_t operator()(const Permutation& p) const noexcept {
            std::uint64_t h = 0xcbf29ce484222325ull;
            for (auto x : p) h = detail::fnv1a(h, x);
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_map<Permutation, Element, VecHash> index;
    std::vector<Permutation> elems;
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    index.emplace(id, 0);
    elems.push_back(id);

    auto compose = [degree](const Permutation& a, const Permutation& b) {
        Permutation r(degree);
        for (std::size_t x = 0; x < degree; ++x) r[x] = a[b[x]];
        return r;
    };

    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& s : generators) {
            Permutation p = compose(elems[head], s);
            if (index.contains(p)) continue;
            if (elems.size() >= cap)
                throw ClosureCapExceeded("group closure exceeds cap group_order=" + std::to_string(cap));
            index.emplace(p, static_cast<Element>(elems.size()));
            elems.push_back(std::move(p));
        }
    }

    auto d = std::make_shared<detail::GroupData>();
    const std::size_t n = elems.size();
    d->order = n;
    d->degree = degree;
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d->table[a * n + b] = index.at(compose(elems[a], elems[b]));
    for (const auto& p : elems) d->labels.push_back(cycle_string(p));
    d->perms = std::move(elems);
    d->name = std::move(name);
    detail::finish_group(*d);
    return FiniteGroup(std::move(d));
}

/// Validates the group axioms on an explicit Cayley table. If the identity is not index 0
/// it is swapped there; labels always refer to the original row numbers.
inline FiniteGroup group_from_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> labels = {}, std::string name = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty table");
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n)
            throw NotAGroup("row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                            " entries, expected " + std::to_string(n));
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] >= n)
                throw NotAGroup("closure: entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                                std::to_string(table[a][b]) + " out of range");
    }
    std::optional<Element> e;
    for (Element c = 0; c < n && !e; ++c) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
        if (ok) e = c;
    }
    if (!e) throw NotAGroup("identity: no two-sided identity element");
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && !found; ++b) found = table[a][b] == *e && table[b][a] == *e;
        if (!found) throw NotAGroup("inverse: element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAGroup("associativity: witness (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");

    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    if (labels.size() != n) throw NotAGroup("label count does not match table order");

    // relabeling: new index of original element
    std::vector<Element> to_new(n), to_old(n);
    std::iota(to_new.begin(), to_new.end(), 0u);
    std::swap(to_new[0], to_new[*e]);
    for (Element i = 0; i < n; ++i) to_old[to_new[i]] = i;

    auto d = std::make_shared<detail::GroupData>();
    d->order = n;
    d->table.resize(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) d->table[a * n + b] = to_new[table[to_old[a]][to_old[b]]];
    for (Element i = 0; i < n; ++i) d->labels.push_back(labels[to_old[i]]);
    d->name = std::move(name);
    detail::finish_group(*d);
    return FiniteGroup(std::move(d));
}

/// Direct product of the factors; element (g_1, …, g_r) has mixed-radix index Σ g_i Π_{j<i} |Γ_j|.
inline FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, std::size_t cap = Caps{}.group_order) {
    std::size_t n = 1;
    for (const auto& f : factors) {
        n *= f.order();
        if (n > cap) throw ClosureCapExceeded("direct product exceeds cap group_order=" + std::to_string(cap));
    }
    auto split = [&](std::size_t x) {
        std::vector<Element> parts;
        for (const auto& f : factors) {
            parts.push_back(static_cast<Element>(x % f.order()));
            x /= f.order();
        }
        return parts;
    };
    auto d = std::make_shared<detail::GroupData>();
    d->order = n;
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        auto pa = split(a);
        for (std::size_t b = 0; b < n; ++b) {
            auto pb = split(b);
            std::size_t r = 0, radix = 1;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                r += factors[i].mul(pa[i], pb[i]) * radix;
                radix *= factors[i].order();
            }
            d->table[a * n + b] = static_cast<Element>(r);
        }
    }
    std::string name;
    for (std::size_t x = 0; x < n; ++x) {
        auto parts = split(x);
        std::string l = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) l += (i ? ", " : "") + factors[i].label(parts[i]);
        d->labels.push_back(l + ")");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + factors[i].name();
    d->name = name;
    detail::finish_group(*d);
    return FiniteGroup(std::move(d));
}

// ---------------------------------------------------------------------------
// Conjugacy classes

/// Classes are 0-based here: class 0 is {identity}; the remaining classes are ordered by their
/// smallest element index. Text/JSON output renders them 1-based.
struct ClassData {
    std::size_t num_classes = 0;
    std::vector<std::uint32_t> class_of;      // element -> class
    std::vector<Element> reps;                // smallest element of each class
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> inverse_class; // class of g⁻¹ for g in the class
};

inline ClassData conjugacy_classes(const FiniteGroup& G) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    ClassData cd;
    cd.class_of.assign(G.order(), unset);
    for (Element x = 0; x < G.order(); ++x) {
        if (cd.class_of[x] != unset) continue;
        const auto c = static_cast<std::uint32_t>(cd.num_classes++);
        std::size_t size = 0;
        for (Element g = 0; g < G.order(); ++g) {
            Element y = G.conj(g, x);
            if (cd.class_of[y] == unset) {
                cd.class_of[y] = c;
                ++size;
            }
        }
        cd.reps.push_back(x);
        cd.sizes.push_back(size);
    }
    for (std::size_t c = 0; c < cd.num_classes; ++c) cd.inverse_class.push_back(cd.class_of[G.inv(cd.reps[c])]);
    return cd;
}

// ---------------------------------------------------------------------------
// Words in Γⁿ

struct GroupWord {
    std::vector<Element> components;

    GroupWord() = default;
    explicit GroupWord(std::vector<Element> c) : components(std::move(c)) {}
    GroupWord(std::initializer_list<Element> c) : components(c) {}

    static GroupWord identity(std::size_t n) { return GroupWord(std::vector<Element>(n, 0)); }

    std::size_t size() const noexcept { return components.size(); }
    Element operator[](std::size_t i) const { return components[i]; }
    Element& operator[](std::size_t i) { return components[i]; }

    auto operator<=>(const GroupWord&) const = default;
    bool operator==(const GroupWord&) const = default;
};

struct GroupWordHash {
    std::size_t operator()(const GroupWord& w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto x : w.components) h = detail::fnv1a(h, x);
        return static_cast<std::size_t>(h);
    }
};

inline void check_lengths(const GroupWord& a, const GroupWord& b) {
    if (a.size() != b.size())
        throw LengthMismatch("word lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

inline GroupWord word_mul(const FiniteGroup& G, const GroupWord& a, const GroupWord& b) {
    check_lengths(a, b);
    GroupWord r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = G.mul(a[i], b[i]);
    return r;
}

inline GroupWord word_inv(const FiniteGroup& G, const GroupWord& a) {
    GroupWord r = a;
    for (auto& x : r.components) x = G.inv(x);
    return r;
}

/// g a g⁻¹ coordinatewise.
inline GroupWord word_conj(const FiniteGroup& G, const GroupWord& g, const GroupWord& a) {
    check_lengths(g, a);
    GroupWord r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = G.conj(g[i], a[i]);
    return r;
}

/// Number of non-identity coordinates.
inline std::size_t word_weight(const FiniteGroup&, const GroupWord& a) {
    return static_cast<std::size_t>(std::count_if(a.components.begin(), a.components.end(),
                                                  [](Element x) { return x != FiniteGroup::identity(); }));
}

inline std::string word_string(const FiniteGroup& G, const GroupWord& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + G.label(a[i]);
    return s + ")";
}

}  // namespace repdual
