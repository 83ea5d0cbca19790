#include "mstd/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "mstd/error.hpp"

namespace mstd::io {

namespace {

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

IntSet int_set_from_json(const json& j) {
    const json& arr = field(j, "elements");
    if (!arr.is_array()) throw ParseError("\"elements\" must be an array");
    std::vector<std::int64_t> values;
    values.reserve(arr.size());
    for (const auto& v : arr) values.push_back(as_int(v, "set element"));
    return IntSet::from_sorted(std::move(values));
}

json to_json(const IntSet& s) {
    return json{{"elements", std::vector<std::int64_t>(s.begin(), s.end())}};
}

IntSet parse_int_set_text(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                     text[pos] == '\r')) {
            ++pos;
        }
        if (pos == text.size()) break;
        std::int64_t v;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        const auto consumed = static_cast<std::size_t>(ptr - (text.data() + pos));
        if (ec != std::errc{} || consumed == 0) {
            throw ParseError("bad integer near \"" + std::string(text.substr(pos, 16)) + "\"");
        }
        pos += consumed;
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'");
        }
        values.push_back(v);
    }
    return IntSet::from_sorted(std::move(values));
}

std::string format_int_set_text(const IntSet& s) {
    std::ostringstream out;
    bool first = true;
    for (auto v : s) {
        if (!first) out << ' ';
        out << v;
        first = false;
    }
    return out.str();
}

GroupSubset group_subset_from_json(const json& j) {
    const json& mods = field(j, "moduli");
    if (!mods.is_array()) throw ParseError("\"moduli\" must be an array");
    std::vector<std::int64_t> moduli;
    for (const auto& m : mods) moduli.push_back(as_int(m, "modulus"));
    const json& elems = field(j, "elements");
    if (!elems.is_array()) throw ParseError("\"elements\" must be an array");
    std::vector<Point> points;
    for (const auto& e : elems) {
        if (!e.is_array()) throw ParseError("group element must be an array");
        Point p;
        for (const auto& c : e) p.push_back(as_int(c, "residue"));
        points.push_back(std::move(p));
    }
    try {
        return GroupSubset(GroupSpec(std::move(moduli)), std::move(points));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

json to_json(const GroupSubset& a) {
    json elems = json::array();
    for (const auto& p : a.elements()) elems.push_back(p);
    return json{{"moduli", a.spec().moduli()}, {"elements", elems}};
}

Gap gap_from_json(const json& j) {
    const std::int64_t base = as_int(field(j, "base"), "base");
    std::vector<GapDim> dims;
    if (j.contains("dims")) {
        const json& arr = j.at("dims");
        if (!arr.is_array()) throw ParseError("\"dims\" must be an array");
        for (const auto& d : arr) {
            dims.push_back({as_int(field(d, "step"), "step"),
                            d.contains("offset") ? as_int(d.at("offset"), "offset") : 0,
                            as_int(field(d, "length"), "length")});
        }
    }
    return Gap(base, std::move(dims));
}

json to_json(const Gap& g) {
    json dims = json::array();
    for (const auto& d : g.dims()) {
        dims.push_back({{"step", d.step}, {"offset", d.offset}, {"length", d.length}});
    }
    return json{{"base", g.base()}, {"dims", dims}};
}

json to_json(const MstdDelta& d) {
    return json{{"sum_card", d.sum_card}, {"diff_card", d.diff_card}, {"delta", d.delta}};
}

json to_json(const CountReport& r, bool include_table) {
    json j{{"n", r.n},
           {"total", r.total},
           {"psi_exact", r.psi_exact},
           {"bound", r.bound},
           {"bound_holds", r.bound_holds},
           {"phi_sum", r.phi_sum()}};
    if (include_table) {
        json table = json::array();
        for (const auto& [g, c] : r.phi_table) {
            table.push_back({{"b", g.first}, {"delta", g.second}, {"phi", c}});
        }
        j["phi_table"] = table;
    }
    return j;
}

json to_json(const SearchReport& r) {
    json spectrum = json::array();
    for (const auto& [d, c] : r.spectrum) {
        json row{{"delta", d}, {"count", c}};
        if (auto it = r.witnesses.find(d); it != r.witnesses.end()) {
            row["witness"] = std::vector<std::int64_t>(it->second.begin(), it->second.end());
        }
        spectrum.push_back(row);
    }
    return json{{"range_max", r.range_max}, {"enumerated", r.enumerated}, {"spectrum", spectrum}};
}

std::string to_csv(const SearchReport& r) {
    std::ostringstream out;
    out << "delta,count,witness\n";
    for (const auto& [d, c] : r.spectrum) {
        out << d << ',' << c << ',';
        if (auto it = r.witnesses.find(d); it != r.witnesses.end()) out << format_int_set_text(it->second);
        out << '\n';
    }
    return out.str();
}

}  // namespace mstd::io
