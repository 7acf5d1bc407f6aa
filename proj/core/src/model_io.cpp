#include "genusforge/model_io.hpp"

#include <fstream>
#include <sstream>

#include "genusforge/version.hpp"
#include "json.hpp"

namespace genusforge {

using ojson = nlohmann::ordered_json;

namespace {

Int json_int(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    throw InvalidInput(std::string(what) + " must be an integer or decimal string");
}

std::vector<std::string> name_list(const nlohmann::json& v, const char* what) {
    if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw InvalidInput(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

IntersectionModel parse_model_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("model file is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw InvalidInput("model file must be a JSON object");
    if (!doc.contains("generators")) throw InvalidInput("model file missing 'generators'");
    if (!doc.contains("gram")) throw InvalidInput("model file missing 'gram'");

    IntersectionModel model;
    model.generators = name_list(doc["generators"], "'generators'");
    const std::size_t n = model.generators.size();

    const auto& gram = doc["gram"];
    if (!gram.is_array() || gram.size() != n)
        throw InvalidInput("'gram' must be a " + std::to_string(n) + "x" +
                           std::to_string(n) + " array");
    model.gram = IntMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!gram[i].is_array() || gram[i].size() != n)
            throw InvalidInput("'gram' row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j)
            model.gram.at(i, j) = json_int(gram[i][j], "gram entry");
    }

    auto resolve = [&](const std::string& name, const char* what) -> std::size_t {
        if (auto idx = model.find(name)) return *idx;
        throw InvalidInput(std::string("unknown ") + what + " '" + name + "'");
    };

    if (doc.contains("effective_tests"))
        for (const auto& name : name_list(doc["effective_tests"], "'effective_tests'"))
            model.effective_tests.push_back(resolve(name, "effective test"));

    const bool has_a = doc.contains("a_block"), has_b = doc.contains("b_block");
    if (has_a != has_b)
        throw InvalidInput("'a_block' and 'b_block' must be given together");
    if (has_a) {
        auto a_names = name_list(doc["a_block"], "'a_block'");
        auto b_names = name_list(doc["b_block"], "'b_block'");
        if (a_names.size() != 9 || b_names.size() != 9)
            throw InvalidInput("curve blocks must list 9 classes each");
        CurveBlocks blocks;
        for (int i = 0; i < 9; ++i) {
            blocks.a_block[i] = resolve(a_names[i], "a_block class");
            blocks.b_block[i] = resolve(b_names[i], "b_block class");
        }
        model.blocks = blocks;
    }
    return model;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

LoadedModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return {parse_model_json(text), fnv1a64_hex(text)};
}

// ---------------------------------------------------------------------------
// Witness records
// ---------------------------------------------------------------------------

namespace {

ojson reider_to_json(const ReiderReport& rep) {
    ojson j;
    j["passed"] = rep.passed;
    j["square_value"] = rep.square_value.str();
    if (rep.worst_test) {
        j["worst_test"] = ojson{{"name", rep.worst_test->first},
                                {"value", rep.worst_test->second.str()}};
    } else {
        j["worst_test"] = nullptr;
    }
    j["caveat"] = rep.caveat;
    return j;
}

ReiderReport reider_from_json(const nlohmann::json& j) {
    ReiderReport rep;
    rep.passed = j.at("passed").get<bool>();
    rep.square_value = json_int(j.at("square_value"), "square_value");
    if (j.contains("worst_test") && !j.at("worst_test").is_null())
        rep.worst_test = {j.at("worst_test").at("name").get<std::string>(),
                          json_int(j.at("worst_test").at("value"), "worst_test value")};
    rep.caveat = j.value("caveat", std::string(kReiderCaveat));
    return rep;
}

ojson ints_to_json(std::span<const Int> xs) {
    ojson arr = ojson::array();
    for (const Int& v : xs) arr.push_back(v.str());
    return arr;
}

std::vector<Int> ints_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    std::vector<Int> out;
    for (const auto& e : arr) out.push_back(json_int(e, what));
    return out;
}

nlohmann::json parse_record(const std::string& text, const char* want_type) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("record is not valid JSON: ") + ex.what());
    }
    if (doc.value("type", std::string()) != want_type)
        throw InvalidInput(std::string("record type is not '") + want_type + "'");
    return doc;
}

}  // namespace

std::string genus_witness_record(const GenusWitness& w, const std::string& model_hash) {
    ojson j;
    j["type"] = "genus-witness";
    j["tool_version"] = kToolVersion;
    j["model_hash"] = model_hash;
    j["g"] = w.g.str();
    j["m"] = w.m.str();
    j["e_used"] = ojson{{"num", w.e_used.num.str()}, {"den", w.e_used.den.str()}};
    j["x"] = ints_to_json(std::span<const Int>(w.x.data(), w.x.size()));
    j["divisor"] = ints_to_json(std::span<const Int>(w.divisor.coeffs.data(),
                                                     w.divisor.coeffs.size()));
    j["reider"] = reider_to_json(w.reider);
    return j.dump(2) + "\n";
}

std::string nodal_witness_record(const NodalWitness& w, const std::string& model_hash) {
    ojson j;
    j["type"] = "nodal-witness";
    j["tool_version"] = kToolVersion;
    j["model_hash"] = model_hash;
    j["g"] = w.g.str();
    j["m"] = w.m.str();
    j["r"] = w.r.str();
    j["l_class"] = ints_to_json(std::span<const Int>(w.l_class.coeffs.data(),
                                                     w.l_class.coeffs.size()));
    j["reider"] = reider_to_json(w.reider);
    return j.dump(2) + "\n";
}

ParsedGenusRecord parse_genus_witness_record(const std::string& json_text) {
    nlohmann::json doc = parse_record(json_text, "genus-witness");
    ParsedGenusRecord out;
    out.model_hash = doc.value("model_hash", std::string());
    out.tool_version = doc.value("tool_version", std::string());
    out.witness.g = json_int(doc.at("g"), "g");
    out.witness.m = json_int(doc.at("m"), "m");
    out.witness.e_used =
        Rational(json_int(doc.at("e_used").at("num"), "e_used num"),
                 json_int(doc.at("e_used").at("den"), "e_used den"));
    auto xs = ints_from_json(doc.at("x"), "x");
    if (xs.size() != 18) throw InvalidInput("record 'x' must have 18 entries");
    std::copy(xs.begin(), xs.end(), out.witness.x.begin());
    out.witness.divisor.coeffs = ints_from_json(doc.at("divisor"), "divisor");
    out.witness.reider = reider_from_json(doc.at("reider"));
    return out;
}

ParsedNodalRecord parse_nodal_witness_record(const std::string& json_text) {
    nlohmann::json doc = parse_record(json_text, "nodal-witness");
    ParsedNodalRecord out;
    out.model_hash = doc.value("model_hash", std::string());
    out.tool_version = doc.value("tool_version", std::string());
    out.witness.g = json_int(doc.at("g"), "g");
    out.witness.m = json_int(doc.at("m"), "m");
    out.witness.r = json_int(doc.at("r"), "r");
    out.witness.l_class.coeffs = ints_from_json(doc.at("l_class"), "l_class");
    out.witness.reider = reider_from_json(doc.at("reider"));
    return out;
}

}  // namespace genusforge
