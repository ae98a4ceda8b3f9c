#pragma once

/**
 * @file input.hpp
 * @brief Group and code description files (JSON).
 *
 * Group descriptions:
 *   {"kind": "permutation", "degree": d, "generators": [[[0, 1]], [[0, 1, 2]]]}   cycles, 0-based points
 *   {"kind": "table", "table": [[...], ...], "labels": [...]}                      labels optional
 *   {"kind": "builtin", "name": "S3"}  or  {"kind": "builtin", "name": "cyclic", "params": {"n": 5}}
 *   {"kind": "product", "factors": [<group>, ...]}
 * A group may also be referenced by a string: "builtin:S3" or a path to a group file.
 *
 * Code descriptions:
 *   {"group": <group or reference>, "n": 2, "generators": [["(0 1)", "(0 1 2)"]]}
 * Generator entries are element labels, cycle notation for permutation groups, or "#<index>".
 * Shorthands accepted wherever a code is expected: "trivial:n=3", "full:n=2", "diag:n=4".
 */

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "builtin_groups.hpp"
#include "codes.hpp"
#include "json_io.hpp"

namespace repdual {

namespace detail {

inline std::string join_path(const std::string& base, const std::string& key) { return base + "/" + key; }
inline std::string join_path(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(join_path(path, key), "missing field");
    return *it;
}

template <typename T>
T get_as(const Json& j, const std::string& path, const char* expected) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(path, std::string("expected ") + expected);
    }
}

/// Parses JSON text; syntax errors report line and column.
inline Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col), "invalid JSON");
    }
}

inline Json read_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string(), "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), file.string());
}

inline std::size_t parse_n_shorthand(const std::string& arg, const std::string& path) {
    auto eq = arg.find("n=");
    if (eq == std::string::npos) throw ParseError(path, "expected n=<length> in '" + arg + "'");
    const std::string digits = arg.substr(eq + 2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
        throw ParseError(path, "invalid length in '" + arg + "'");
    return std::stoul(digits);
}

}  // namespace detail

inline FiniteGroup parse_group(const Json& j, const std::string& path = "", const std::filesystem::path& base_dir = {},
                               const Caps& caps = {});

inline FiniteGroup load_group_reference(const std::string& ref, const std::string& path,
                                        const std::filesystem::path& base_dir = {}, const Caps& caps = {}) {
    if (ref.rfind("builtin:", 0) == 0) {
        try {
            return builtin_group(ref.substr(8));
        } catch (const DomainError& e) {
            throw ParseError(path, e.what());
        }
    }
    std::filesystem::path file = ref;
    if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
    return parse_group(detail::read_json_file(file), file.string(), file.parent_path(), caps);
}

inline FiniteGroup parse_group(const Json& j, const std::string& path, const std::filesystem::path& base_dir,
                               const Caps& caps) {
    using namespace detail;
    if (j.is_string()) return load_group_reference(j.get<std::string>(), path, base_dir, caps);
    const auto kind = get_as<std::string>(field(j, "kind", path), join_path(path, "kind"), "a string");
    try {
        if (kind == "permutation") {
            const auto degree = get_as<std::size_t>(field(j, "degree", path), join_path(path, "degree"), "an integer");
            const auto& gens = field(j, "generators", path);
            if (!gens.is_array()) throw ParseError(join_path(path, "generators"), "expected an array");
            std::vector<Permutation> perms;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const std::string gpath = join_path(join_path(path, "generators"), g);
                auto cycles = get_as<std::vector<std::vector<std::uint32_t>>>(gens[g], gpath, "a list of cycles");
                try {
                    perms.push_back(permutation_from_cycles(degree, cycles));
                } catch (const InvalidPermutation& e) {
                    throw ParseError(gpath, e.what());
                }
            }
            std::string name = j.contains("name") ? get_as<std::string>(j["name"], join_path(path, "name"), "a string") : "";
            return group_from_generators(degree, perms, caps.group_order, name);
        }
        if (kind == "table") {
            auto table = get_as<std::vector<std::vector<Element>>>(field(j, "table", path), join_path(path, "table"),
                                                                   "a square integer matrix");
            std::vector<std::string> labels;
            if (j.contains("labels"))
                labels = get_as<std::vector<std::string>>(j["labels"], join_path(path, "labels"), "a list of strings");
            std::string name = j.contains("name") ? get_as<std::string>(j["name"], join_path(path, "name"), "a string") : "";
            try {
                return group_from_table(table, labels, name);
            } catch (const NotAGroup& e) {
                throw ParseError(join_path(path, "table"), e.what());
            }
        }
        if (kind == "builtin") {
            const auto name = get_as<std::string>(field(j, "name", path), join_path(path, "name"), "a string");
            auto param_n = [&] {
                const auto& params = field(j, "params", path);
                return get_as<std::size_t>(field(params, "n", join_path(path, "params")),
                                           join_path(join_path(path, "params"), "n"), "an integer");
            };
            try {
                if (name == "cyclic") return cyclic_group(param_n());
                if (name == "symmetric") return symmetric_group(param_n());
                if (name == "dihedral") return dihedral_group(param_n());
                if (name == "quaternion") return quaternion_group();
                return builtin_group(name);
            } catch (const DomainError& e) {
                throw ParseError(join_path(path, "name"), e.what());
            }
        }
        if (kind == "product") {
            const auto& factors = field(j, "factors", path);
            if (!factors.is_array() || factors.empty())
                throw ParseError(join_path(path, "factors"), "expected a non-empty array");
            std::vector<FiniteGroup> groups;
            for (std::size_t i = 0; i < factors.size(); ++i)
                groups.push_back(parse_group(factors[i], join_path(join_path(path, "factors"), i), base_dir, caps));
            return direct_product(groups, caps.group_order);
        }
    } catch (const ClosureCapExceeded& e) {
        throw ParseError(path, e.what());
    }
    throw ParseError(join_path(path, "kind"), "unknown kind '" + kind + "'");
}

/// Element by label, by cycle notation (permutation groups), or by "#index".
inline std::optional<Element> parse_element(const FiniteGroup& G, const std::string& text) {
    if (auto e = G.find_label(text)) return e;
    if (text.size() > 1 && text[0] == '#') {
        const std::string digits = text.substr(1);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 10) {
            const auto idx = std::stoul(digits);
            if (idx < G.order()) return static_cast<Element>(idx);
        }
        return std::nullopt;
    }
    if (G.is_permutation_group() && !text.empty() && text.front() == '(') {
        std::vector<std::vector<std::uint32_t>> cycles;
        std::vector<std::uint32_t> cur;
        bool open = false;
        std::string num;
        auto flush = [&] {
            if (!num.empty()) {
                cur.push_back(static_cast<std::uint32_t>(std::stoul(num)));
                num.clear();
            }
        };
        for (char ch : text) {
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                if (!open || num.size() > 6) return std::nullopt;
                num += ch;
            } else if (ch == '(') {
                if (open) return std::nullopt;
                open = true;
            } else if (ch == ')') {
                if (!open) return std::nullopt;
                flush();
                cycles.push_back(cur);
                cur.clear();
                open = false;
            } else if (ch == ' ' || ch == ',') {
                flush();
            } else {
                return std::nullopt;
            }
        }
        if (open) return std::nullopt;
        try {
            const std::string canonical = cycle_string(permutation_from_cycles(G.permutation_degree(), cycles));
            return G.find_label(canonical);
        } catch (const InvalidPermutation&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Code shorthand ("trivial:n=3", "full:n=2", "diag:n=4") over a given group.
inline std::optional<GroupCode> parse_code_shorthand(const std::string& text, const FiniteGroup& G, const Caps& caps) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string kind = text.substr(0, colon);
    if (kind != "trivial" && kind != "full" && kind != "diag" && kind != "diagonal") return std::nullopt;
    const std::size_t n = detail::parse_n_shorthand(text.substr(colon + 1), "--code");
    if (n == 0) throw ParseError("--code", "length must be at least 1");
    if (kind == "trivial") return trivial_code(G, n);
    try {
        if (kind == "full") return full_code(G, n, caps.code_size);
    } catch (const ClosureCapExceeded& e) {
        throw CapExceeded(e.what());
    }
    return diagonal_code(G, n);
}

/// `fallback_group` is used when the description has no "group" field.
inline GroupCode parse_code(const Json& j, const std::optional<FiniteGroup>& fallback_group, const Caps& caps = {},
                            const std::string& path = "", const std::filesystem::path& base_dir = {}) {
    using namespace detail;
    if (!j.is_object()) throw ParseError(path, "expected an object");
    FiniteGroup G;
    if (j.contains("group"))
        G = parse_group(j["group"], join_path(path, "group"), base_dir, caps);
    else if (fallback_group)
        G = *fallback_group;
    else
        throw ParseError(join_path(path, "group"), "missing field (and no --group given)");
    const auto n = get_as<std::size_t>(field(j, "n", path), join_path(path, "n"), "an integer");
    if (n == 0) throw ParseError(join_path(path, "n"), "length must be at least 1");
    const auto& gens = field(j, "generators", path);
    if (!gens.is_array()) throw ParseError(join_path(path, "generators"), "expected an array");
    std::vector<GroupWord> words;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string gpath = join_path(join_path(path, "generators"), g);
        auto labels = get_as<std::vector<std::string>>(gens[g], gpath, "a list of element labels");
        if (labels.size() != n)
            throw ParseError(gpath, "has " + std::to_string(labels.size()) + " coordinates, expected " + std::to_string(n));
        GroupWord w{std::vector<Element>(n)};
        for (std::size_t m = 0; m < n; ++m) {
            auto e = parse_element(G, labels[m]);
            if (!e) throw ParseError(join_path(gpath, m), "unknown element '" + labels[m] + "'");
            w[m] = *e;
        }
        words.push_back(std::move(w));
    }
    try {
        return code_from_generators(G, n, words, caps.code_size);
    } catch (const ClosureCapExceeded& e) {
        throw CapExceeded(e.what());
    }
}

inline GroupCode load_code(const std::string& ref, const std::optional<FiniteGroup>& fallback_group, const Caps& caps = {}) {
    if (fallback_group)
        if (auto c = parse_code_shorthand(ref, *fallback_group, caps)) return *c;
    if (ref.find(':') != std::string::npos && !std::filesystem::exists(ref)) {
        const std::string kind = ref.substr(0, ref.find(':'));
        if (kind == "trivial" || kind == "full" || kind == "diag" || kind == "diagonal")
            throw ParseError("--group", "code shorthand '" + ref + "' needs --group");
    }
    const std::filesystem::path file = ref;
    return parse_code(detail::read_json_file(file), fallback_group, caps, file.string(), file.parent_path());
}

}  // namespace repdual
