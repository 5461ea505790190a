#pragma once

/**
 * @file serialize.hpp
 * @brief Ring table caches in JSON and binary form.
 *
 * JSON: {"version":1,"label":..,"order":n,"zero":i,"one":i,"add":[[..]],"mul":[[..]]}
 * Binary: "FRC1", then little-endian u32 order, zero, one, add table, mul table
 * (row-major). The binary form carries no label. Element renderings are not
 * stored; reloaded rings render elements by index.
 */

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finring/error.hpp"
#include "finring/ring.hpp"

namespace finring {

class FormatError : public Error {
public:
    using Error::Error;
};

enum class CacheFormat { json, binary };

inline nlohmann::json ring_to_json(const FiniteRing& R) {
    const std::uint32_t n = R.order();
    auto table = [n](std::span<const Elem> t) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint32_t a = 0; a < n; ++a)
            rows.push_back(std::vector<Elem>(t.begin() + std::size_t(a) * n, t.begin() + std::size_t(a + 1) * n));
        return rows;
    };
    return {{"version", 1},      {"label", R.label()},        {"order", n},
            {"zero", R.zero()},  {"one", R.one()},            {"add", table(R.add_table())},
            {"mul", table(R.mul_table())}};
}

inline FiniteRing ring_from_json(const nlohmann::json& j) {
    try {
        if (j.at("version").get<int>() != 1) throw FormatError("unsupported cache version");
        const auto n = j.at("order").get<std::uint32_t>();
        require_order(n, "cached ring");
        auto table = [n](const nlohmann::json& rows) {
            if (!rows.is_array() || rows.size() != n) throw FormatError("table must have `order` rows");
            std::vector<Elem> out;
            out.reserve(std::size_t(n) * n);
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() != n) throw FormatError("table row must have `order` entries");
                for (const auto& v : row) out.push_back(v.get<Elem>());
            }
            return out;
        };
        return checked(FiniteRing::from_tables(j.at("label").get<std::string>(), n, table(j.at("add")),
                                               table(j.at("mul")), j.at("zero").get<Elem>(),
                                               j.at("one").get<Elem>()));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed ring cache: ") + e.what());
    }
}

inline std::string ring_to_binary(const FiniteRing& R) {
    std::string out = "FRC1";
    auto put = [&out](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    };
    out.reserve(16 + 8 * std::size_t(R.order()) * R.order());
    put(R.order());
    put(R.zero());
    put(R.one());
    for (Elem v : R.add_table()) put(v);
    for (Elem v : R.mul_table()) put(v);
    return out;
}

inline FiniteRing ring_from_binary(const std::string& bytes, std::string label = "cached") {
    if (bytes.size() < 16 || bytes.compare(0, 4, "FRC1") != 0) throw FormatError("missing FRC1 header");
    std::size_t pos = 4;
    auto get = [&]() {
        if (pos + 4 > bytes.size()) throw FormatError("truncated binary ring cache");
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
        pos += 4;
        return v;
    };
    const std::uint32_t n = get();
    const Elem zero = get(), one = get();
    require_order(n, "cached ring");
    const std::size_t cells = std::size_t(n) * n;
    if (bytes.size() != 16 + 8 * cells) throw FormatError("binary ring cache has the wrong length");
    std::vector<Elem> add(cells), mul(cells);
    for (auto& v : add) v = get();
    for (auto& v : mul) v = get();
    return checked(FiniteRing::from_tables(std::move(label), n, std::move(add), std::move(mul), zero, one));
}

inline void save_ring(const FiniteRing& R, const std::string& path, CacheFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    if (format == CacheFormat::json)
        out << ring_to_json(R).dump() << '\n';
    else
        out << ring_to_binary(R);
    if (!out) throw FormatError("failed writing " + path);
}

/// Loads either format; the binary magic decides.
inline FiniteRing load_ring(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.rfind("FRC1", 0) == 0) return ring_from_binary(bytes, path);
    try {
        return ring_from_json(nlohmann::json::parse(bytes));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

}  // namespace finring
