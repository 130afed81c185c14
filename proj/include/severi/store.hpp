#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "severi/errors.hpp"
#include "severi/ntable.hpp"

namespace severi {

// On-disk interchange format for N-tables: one self-contained JSON object
// per line,
//
//   {"surface":"F2","coords":[2,0],"i":1,"value":"10","provenance":"computed"}
//
// sorted by (surface, coords, i). Values are decimal strings so counts
// survive any word size, and the writer is canonical: save-load-save is
// byte-identical.

inline void save_table(const NTable& table, std::ostream& out) {
    for (const auto& [key, entry] : table) {
        nlohmann::ordered_json record;
        record["surface"] = key.surface.tag();
        record["coords"] = key.coords;
        record["i"] = key.tangency;
        record["value"] = entry.value.str();
        record["provenance"] = to_string(entry.provenance);
        out << record.dump() << '\n';
        if (!out) throw std::runtime_error("save_table: write failed");
    }
}

inline std::string table_to_string(const NTable& table) {
    std::ostringstream out;
    save_table(table, out);
    return out.str();
}

namespace detail {

inline Count parse_nonnegative_count(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty value");
    for (char c : text)
        if (c < '0' || c > '9') throw std::invalid_argument("value is not a nonnegative decimal integer");
    return Count(text);
}

} // namespace detail

inline NTable load_table(std::istream& in) {
    NTable table;
    std::string line;
    int line_number = 0;
    auto fail = [&](const std::string& what) -> FormatError {
        return FormatError("load_table: line " + std::to_string(line_number) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) throw fail("not a JSON object");
        try {
            auto surface = Surface::from_tag(record.at("surface").get<std::string>());
            if (!surface) throw fail("unknown surface tag");
            auto coords = record.at("coords").get<std::vector<long long>>();
            DivisorClass d(*surface, coords); // validates rank
            int i = record.at("i").get<int>();
            if (i < 1) throw fail("tangency index must be >= 1");
            Count value = detail::parse_nonnegative_count(record.at("value").get<std::string>());
            auto provenance = provenance_from_string(record.at("provenance").get<std::string>());
            if (!provenance) throw fail("unknown provenance");

            if (const TableEntry* existing = table.find(d, i)) {
                if (existing->value != value)
                    throw fail("conflicting values for (" + surface->tag() + ", "
                               + record.at("coords").dump() + ", i=" + std::to_string(i) + ")");
                continue; // identical duplicate, keep the first record
            }
            table.set(d, i, std::move(value), *provenance);
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    return table;
}

inline NTable table_from_string(const std::string& text) {
    std::istringstream in(text);
    return load_table(in);
}

} // namespace severi
