#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace repdual {

inline FiniteGroup cyclic_group(std::size_t m) {
    if (m == 0) throw DomainError("cyclic group of order 0");
    std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t[a][b] = static_cast<Element>((a + b) % m);
    return group_from_table(t, {}, "Z" + std::to_string(m));
}

/// S_d generated by (0 1) and (0 1 … d-1).
inline FiniteGroup symmetric_group(std::size_t d, std::size_t cap = Caps{}.group_order) {
    if (d == 0) throw DomainError("symmetric group on 0 points");
    std::vector<Permutation> gens;
    if (d >= 2) gens.push_back(permutation_from_cycles(d, {{0, 1}}));
    if (d >= 3) {
        std::vector<std::uint32_t> cyc(d);
        std::iota(cyc.begin(), cyc.end(), 0u);
        gens.push_back(permutation_from_cycles(d, {cyc}));
    }
    return group_from_generators(d, gens, cap, "S" + std::to_string(d));
}

/// Symmetries of the d-gon (order 2d), generated by (0 1 … d-1) and x ↦ 2 - x mod d.
inline FiniteGroup dihedral_group(std::size_t d) {
    if (d < 3) throw DomainError("dihedral group needs at least 3 vertices");
    std::vector<std::uint32_t> cyc(d);
    std::iota(cyc.begin(), cyc.end(), 0u);
    Permutation reflection(d);
    for (std::size_t x = 0; x < d; ++x) reflection[x] = static_cast<std::uint32_t>((2 * d + 2 - x) % d);
    return group_from_generators(d, {permutation_from_cycles(d, {cyc}), reflection}, Caps{}.group_order,
                                 "D" + std::to_string(d));
}

/// Quaternion group. Index 2u + s encodes (-1)^s · unit[u], unit = (1, i, j, k).
inline FiniteGroup quaternion_group() {
    // unit product table: unit[a]·unit[b] = sign · unit[c]
    static constexpr int prod_unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int prod_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2;
            int s = (a % 2) ^ (b % 2) ^ prod_sign[ua][ub];
            t[a][b] = static_cast<Element>(2 * prod_unit[ua][ub] + s);
        }
    return group_from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

/// Names: Z<m> (or C<m>), S<d>, D<d> (d-gon, order 2d), Q8.
inline FiniteGroup builtin_group(const std::string& name) {
    auto number = [&](std::size_t from) -> std::size_t {
        const std::string digits = name.substr(from);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
            throw DomainError("unknown builtin group '" + name + "'");
        return std::stoul(digits);
    };
    if (name == "Q8") return quaternion_group();
    if (!name.empty() && (name[0] == 'Z' || name[0] == 'C')) return cyclic_group(number(1)).renamed(name);
    if (!name.empty() && name[0] == 'S') return symmetric_group(number(1));
    if (!name.empty() && name[0] == 'D') return dihedral_group(number(1));
    throw DomainError("unknown builtin group '" + name + "'");
}

}  // namespace repdual
