#include "hhcalc/json_io.hpp"

#include <charconv>
#include <cstdint>
#include <limits>

#include "hhcalc/errors.hpp"

namespace hhcalc {

namespace {

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    return j;
}

const json& expect_field(const json& j, const std::string& path, const char* key) {
    expect_object(j, path);
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

int int_from_json(const json& j, const std::string& path, int lo = std::numeric_limits<int>::min(),
                  int hi = std::numeric_limits<int>::max()) {
    if (!j.is_number_integer())
        throw SchemaError(path, "expected an integer");
    const std::int64_t v = j.get<std::int64_t>();
    if (v < lo || v > hi)
        throw SchemaError(path, "integer out of range [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    return static_cast<int>(v);
}

int parse_int_key(const std::string& key, const std::string& path) {
    int value = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw SchemaError(path, "\"" + key + "\" is not an integer degree");
    return value;
}

std::pair<int, int> parse_pair_key(const std::string& key, const std::string& path) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw SchemaError(path, "\"" + key + "\" is not a \"p,q\" index pair");
    return {parse_int_key(key.substr(0, comma), path), parse_int_key(key.substr(comma + 1), path)};
}

} // namespace

json dim_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(v);
    return v.str();
}

BigInt dim_from_json(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        if (v < 0) throw SchemaError(path, "dimension must be nonnegative");
        return BigInt(v);
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw SchemaError(path, "\"" + s + "\" is not a nonnegative integer");
        return BigInt(s);
    }
    throw SchemaError(path, "expected a nonnegative integer (number or decimal string)");
}

json dims_to_json(const GradedDims& v, const std::optional<std::string>& kind) {
    json dims = json::object();
    for (const auto& [deg, dim] : v.entries()) dims[std::to_string(deg)] = dim_to_json(dim);
    json out{{"dims", std::move(dims)}};
    if (kind) out["kind"] = *kind;
    return out;
}

std::pair<GradedDims, std::optional<std::string>> dims_from_json_tagged(const json& j,
                                                                        const std::string& path) {
    const json& dims = expect_field(j, path, "dims");
    if (!dims.is_object()) throw SchemaError(path + ".dims", "expected an object of degree: dim");
    GradedDims v;
    for (const auto& [key, value] : dims.items()) {
        const std::string field = path + ".dims." + key;
        const int degree = parse_int_key(key, field);
        const BigInt dim = dim_from_json(value, field);
        if (v.at(degree) != 0) throw SchemaError(field, "duplicate degree");
        v.set(degree, dim);
    }
    std::optional<std::string> kind;
    if (auto it = j.find("kind"); it != j.end()) {
        if (!it->is_string()) throw SchemaError(path + ".kind", "expected a string");
        kind = it->get<std::string>();
        if (*kind != "homology" && *kind != "cohomology")
            throw SchemaError(path + ".kind", "expected \"homology\" or \"cohomology\"");
    }
    return {std::move(v), std::move(kind)};
}

GradedDims dims_from_json(const json& j, const std::string& path) {
    return dims_from_json_tagged(j, path).first;
}

json interval_to_json(const GradedInterval& v) {
    return {{"lo", dims_to_json(v.lo())}, {"hi", dims_to_json(v.hi())}};
}

GradedInterval interval_from_json(const json& j, const std::string& path) {
    GradedDims lo = dims_from_json(expect_field(j, path, "lo"), path + ".lo");
    GradedDims hi = dims_from_json(expect_field(j, path, "hi"), path + ".hi");
    try {
        return GradedInterval(std::move(lo), std::move(hi));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path, e.what());
    }
}

json diamond_to_json(const HodgeDiamond& d) {
    json rows = json::array();
    for (int p = 0; p <= d.dim(); ++p) {
        json row = json::array();
        for (int q = 0; q <= d.dim(); ++q) row.push_back(dim_to_json(d.h(p, q)));
        rows.push_back(std::move(row));
    }
    return {{"dim", d.dim()}, {"h", std::move(rows)}};
}

HodgeDiamond diamond_from_json(const json& j, const std::string& path) {
    const int dim = int_from_json(expect_field(j, path, "dim"), path + ".dim", 0, 1 << 20);
    const json& h = expect_field(j, path, "h");
    if (!h.is_array()) throw SchemaError(path + ".h", "expected an array of rows");
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t p = 0; p < h.size(); ++p) {
        const std::string rp = path + ".h[" + std::to_string(p) + "]";
        if (!h[p].is_array()) throw SchemaError(rp, "expected an array");
        std::vector<BigInt> row;
        for (std::size_t q = 0; q < h[p].size(); ++q)
            row.push_back(dim_from_json(h[p][q], rp + "[" + std::to_string(q) + "]"));
        rows.push_back(std::move(row));
    }
    try {
        return HodgeDiamond(dim, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path, e.what());
    }
}

json variety_spec_to_json(const VarietySpec& s) {
    return {{"weights", s.weights}, {"degree", s.degree}};
}

VarietySpec variety_spec_from_json(const json& j, const std::string& path) {
    const json& w = expect_field(j, path, "weights");
    if (!w.is_array()) throw SchemaError(path + ".weights", "expected an array");
    VarietySpec s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s.weights.push_back(
            int_from_json(w[i], path + ".weights[" + std::to_string(i) + "]", 1, 1 << 20));
    s.degree = int_from_json(expect_field(j, path, "degree"), path + ".degree", 1, 1 << 20);
    return s;
}

json polyvectors_to_json(const PolyvectorTable& t) {
    json table = json::object();
    for (const auto& [pq, v] : t.a)
        table[std::to_string(pq.first) + "," + std::to_string(pq.second)] = dim_to_json(v);
    return {{"dim", t.dim}, {"table", std::move(table)}};
}

PolyvectorTable polyvectors_from_json(const json& j, const std::string& path) {
    const int dim = int_from_json(expect_field(j, path, "dim"), path + ".dim", 0, 1 << 20);
    const json& table = expect_field(j, path, "table");
    if (!table.is_object()) throw SchemaError(path + ".table", "expected an object");
    std::map<std::pair<int, int>, BigInt> a;
    for (const auto& [key, value] : table.items()) {
        const std::string field = path + ".table." + key;
        a.emplace(parse_pair_key(key, field), dim_from_json(value, field));
    }
    try {
        return PolyvectorTable::make(dim, std::move(a));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ".table", e.what());
    }
}

json sod_spec_to_json(const SodSpec& s) {
    json components = json::array();
    for (const auto& c : s.components)
        components.push_back({{"label", c.label}, {"hh", dims_to_json(c.hh, "homology")}});
    return {{"total", dims_to_json(s.total, "homology")},
            {"components", std::move(components)},
            {"exceptional_count", s.exceptional_count}};
}

SodSpec sod_spec_from_json(const json& j, const std::string& path) {
    SodSpec s;
    {
        auto [dims, kind] = dims_from_json_tagged(expect_field(j, path, "total"), path + ".total");
        if (kind != "homology")
            throw SchemaError(path + ".total.kind",
                              "semiorthogonal additivity applies to Hochschild homology only; "
                              "tag the total with \"kind\": \"homology\"");
        s.total = std::move(dims);
    }
    if (auto it = j.find("components"); it != j.end()) {
        if (!it->is_array()) throw SchemaError(path + ".components", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string cp = path + ".components[" + std::to_string(i) + "]";
            const json& cj = (*it)[i];
            const json& label = expect_field(cj, cp, "label");
            if (!label.is_string()) throw SchemaError(cp + ".label", "expected a string");
            auto [dims, kind] = dims_from_json_tagged(expect_field(cj, cp, "hh"), cp + ".hh");
            if (kind && *kind != "homology")
                throw SchemaError(cp + ".hh.kind",
                                  "cohomology is not additive over semiorthogonal decompositions");
            s.components.push_back({label.get<std::string>(), std::move(dims)});
        }
    }
    if (auto it = j.find("exceptional_count"); it != j.end()) {
        if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
            throw SchemaError(path + ".exceptional_count", "expected a nonnegative integer");
        s.exceptional_count = it->get<std::int64_t>();
    }
    return s;
}

json serre_to_json(const SerreDescriptor& s) {
    return {{"shift_n", s.shift_n}, {"twist_order_q", s.twist_order_q}};
}

SerreDescriptor serre_from_json(const json& j, const std::string& path) {
    SerreDescriptor s;
    s.shift_n = int_from_json(expect_field(j, path, "shift_n"), path + ".shift_n");
    s.twist_order_q =
        int_from_json(expect_field(j, path, "twist_order_q"), path + ".twist_order_q", 1,
                      std::numeric_limits<int>::max());
    return s;
}

json z2_split_to_json(const Z2Split& s) {
    return {{"hh_coh", interval_to_json(s.hh_coh)},
            {"invariant_hom", interval_to_json(s.invariant_hom)}};
}

json fixed_locus_datum_to_json(const FixedLocusDatum& d) {
    json table = json::object();
    for (const auto& [pj, v] : d.table)
        table[std::to_string(pj.first) + "," + std::to_string(pj.second)] = dim_to_json(v);
    return {{"label", d.label},
            {"codim", d.codim},
            {"table", std::move(table)},
            {"invariant", interval_to_json(d.invariant)}};
}

FixedLocusDatum fixed_locus_datum_from_json(const json& j, const std::string& path) {
    const json& label = expect_field(j, path, "label");
    if (!label.is_string()) throw SchemaError(path + ".label", "expected a string");
    const int codim = int_from_json(expect_field(j, path, "codim"), path + ".codim", 0, 1 << 20);
    const json& table = expect_field(j, path, "table");
    if (!table.is_object()) throw SchemaError(path + ".table", "expected an object");
    std::map<std::pair<int, int>, BigInt> a;
    for (const auto& [key, value] : table.items()) {
        const std::string field = path + ".table." + key;
        a.emplace(parse_pair_key(key, field), dim_from_json(value, field));
    }
    std::optional<GradedInterval> invariant;
    if (auto it = j.find("invariant"); it != j.end())
        invariant = interval_from_json(*it, path + ".invariant");
    // MalformedDatumError from the factory propagates as a domain error.
    return make_fixed_locus_datum(label.get<std::string>(), codim, std::move(a),
                                  std::move(invariant));
}

std::vector<FixedLocusDatum> fixed_locus_data_from_json(const json& j, const std::string& path) {
    const json* arr = &j;
    std::string arr_path = path;
    if (j.is_object()) {
        arr = &expect_field(j, path, "data");
        arr_path = path + ".data";
    }
    if (!arr->is_array()) throw SchemaError(arr_path, "expected an array of fixed-locus data");
    std::vector<FixedLocusDatum> data;
    for (std::size_t i = 0; i < arr->size(); ++i)
        data.push_back(
            fixed_locus_datum_from_json((*arr)[i], arr_path + "[" + std::to_string(i) + "]"));
    return data;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("$", "malformed JSON document");
    return j;
}

} // namespace hhcalc
