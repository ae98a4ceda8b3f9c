#pragma once

/**
 * @file chartable_cache.hpp
 * @brief Memoized character tables keyed by the group's table hash, with an optional
 * JSON file cache. Lookup-or-compute runs once per key (lock per key); tables read
 * from disk are re-certified before use.
 */

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "chartable.hpp"
#include "json_io.hpp"

namespace repdual {

inline std::optional<CharacterTable> character_table_from_json(const FiniteGroup& G, const Json& j) {
    try {
        if (j.at("table_hash").get<std::string>() != hex64(G.table_hash())) return std::nullopt;
        if (j.at("order").get<std::size_t>() != G.order()) return std::nullopt;
        CharacterTable ct;
        ct.group = G;
        ct.classes = conjugacy_classes(G);
        ct.k = ct.classes.num_classes;
        ct.prime = j.at("prime").get<std::uint64_t>();
        const auto& irreps = j.at("irreps");
        if (irreps.size() != ct.k) return std::nullopt;
        for (const auto& irr : irreps) {
            ct.degrees.push_back(irr.at("degree").get<unsigned>());
            ct.irrep_labels.push_back(irr.at("label").get<std::string>());
            std::vector<CycInteger> row;
            for (const auto& v : irr.at("values")) {
                const Cyclotomic c = cyclotomic_from_json(v);
                std::vector<Integer> coeffs;
                for (const auto& x : c.coeffs()) {
                    if (!is_integer(x)) return std::nullopt;
                    coeffs.push_back(numerator(x));
                }
                row.push_back(CycInteger::from_coeffs(c.conductor(), coeffs).promoted(G.exponent()));
            }
            ct.values.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < ct.k; ++i) ct.irrep_order.push_back(i);
        if (!certify_character_table(ct).empty()) return std::nullopt;
        return ct;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

class CharacterTableCache {
   public:
    explicit CharacterTableCache(std::optional<std::filesystem::path> dir = std::nullopt) : dir_(std::move(dir)) {}

    std::shared_ptr<const CharacterTable> get(const FiniteGroup& G) {
        std::shared_ptr<Slot> slot;
        {
            std::lock_guard lock(mutex_);
            auto& s = slots_[G.table_hash()];
            if (!s) s = std::make_shared<Slot>();
            slot = s;
        }
        std::call_once(slot->once, [&] { slot->table = load_or_compute(G); });
        if (!(slot->table->group == G)) return std::make_shared<const CharacterTable>(character_table(G));
        return slot->table;
    }

    std::size_t computed() const noexcept { return computed_; }

   private:
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const CharacterTable> table;
    };

    std::shared_ptr<const CharacterTable> load_or_compute(const FiniteGroup& G) {
        std::optional<std::filesystem::path> file;
        if (dir_) {
            file = *dir_ / ("chartable-" + hex64(G.table_hash()) + ".json");
            std::ifstream in(*file);
            if (in) {
                try {
                    if (auto ct = character_table_from_json(G, Json::parse(in)))
                        return std::make_shared<const CharacterTable>(std::move(*ct));
                } catch (const std::exception&) {
                }
            }
        }
        auto ct = std::make_shared<const CharacterTable>(character_table(G));
        ++computed_;
        if (file) {
            std::error_code ec;
            std::filesystem::create_directories(*dir_, ec);
            std::ofstream out(*file);
            if (out) out << to_json(*ct).dump(2) << "\n";
        }
        return ct;
    }

    std::optional<std::filesystem::path> dir_;
    std::mutex mutex_;
    std::map<std::uint64_t, std::shared_ptr<Slot>> slots_;
    std::atomic<std::size_t> computed_{0};
};

}  // namespace repdual
