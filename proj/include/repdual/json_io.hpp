#pragma once

/**
 * @file json_io.hpp
 * @brief JSON renderings of the library's values. Key order is fixed (ordered_json) and
 * collections are emitted in canonical order, so identical inputs give identical bytes.
 *
 * Indices that the text format shows 1-based (classes, irreps, coordinates) are 1-based here too.
 */

#include <cstdio>
#include <string>

#include <json.hpp>

#include "chartable.hpp"
#include "codes.hpp"
#include "duality.hpp"
#include "polynomial.hpp"

namespace repdual {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

template <typename S>
Json to_json(const basic_cyclotomic<S>& c) {
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(to_string(Rational(x)));
    return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    const unsigned m = j.at("conductor").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Cyclotomic::from_coeffs(m, coeffs);
}

inline Json to_json(const UniPoly& p) {
    Json terms = Json::array();
    for (const auto& [d, c] : p.terms()) terms.push_back(Json{{"degree", d}, {"coeff", to_string(c)}});
    return terms;
}

inline Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", to_string(c)}});
    return Json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline Json to_json(const FiniteGroup& G, const ClassData& cd) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < cd.num_classes; ++c)
        classes.push_back(Json{{"index", c + 1},
                               {"representative", G.label(cd.reps[c])},
                               {"size", cd.sizes[c]},
                               {"element_order", G.element_order(cd.reps[c])}});
    return Json{{"group", G.name()}, {"order", G.order()}, {"exponent", G.exponent()}, {"classes", classes}};
}

inline Json to_json(const CharacterTable& ct) {
    Json j = to_json(ct.group, ct.classes);
    j["table_hash"] = hex64(ct.group.table_hash());
    j["prime"] = ct.prime;
    Json irreps = Json::array();
    for (std::size_t i = 0; i < ct.k; ++i) {
        Json values = Json::array();
        for (const auto& v : ct.values[i]) values.push_back(to_json(v));
        irreps.push_back(Json{{"index", i + 1}, {"label", ct.irrep_labels[i]}, {"degree", ct.degrees[i]}, {"values", values}});
    }
    j["irreps"] = irreps;
    return j;
}

inline Json to_json(const RankProfile& rp) {
    Json card = Json::array();
    for (std::size_t S = 0; S < rp.card.size(); ++S) {
        Json coords = Json::array();
        for (std::size_t i = 0; i < rp.n; ++i)
            if (S >> i & 1u) coords.push_back(i + 1);
        card.push_back(Json{{"subset", coords}, {"card", rp.card[S].str()}});
    }
    return Json{{"n", rp.n}, {"group_order", rp.group_order}, {"card", card}};
}

inline Json to_json(const DualMultiset& dm) {
    Json tuples = Json::array();
    for (const auto& [j, m] : dm.mult) {
        Json idx = Json::array();
        for (auto x : j) idx.push_back(x + 1);
        tuples.push_back(Json{{"j", idx},
                              {"mult", checked_int64(m)},
                              {"dim", checked_int64(dm.dim(j))},
                              {"weight", dm.weight(j)},
                              {"label", dm.tuple_label(j)}});
    }
    return Json{{"tuples", tuples}};
}

inline Json to_json(const PermutationCharacter& pc) {
    Json values = Json::array();
    for (std::size_t idx = 0; idx < pc.values.size(); ++idx) {
        Json cls = Json::array();
        for (auto c : detail::decode_tuple(idx, pc.k, pc.n)) cls.push_back(c + 1);
        values.push_back(Json{{"classes", cls}, {"value", pc.values[idx].str()}});
    }
    return Json{{"values", values}};
}

}  // namespace repdual
