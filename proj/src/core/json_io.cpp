#include "core/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace polysft {

using nlohmann::json;

namespace {

// Converts nlohmann type/access errors into parse failures.
template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("malformed input: ") + e.what());
    }
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "malformed JSON");
    return j;
}

IntVec read_int_vec(const json& j, const char* what) {
    if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array of integers");
    IntVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) fail(ErrorCode::Parse, std::string(what) + " must contain integers");
        v.push_back(x.get<std::int64_t>());
    }
    return v;
}

IntMat read_int_mat(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) fail(ErrorCode::Parse, std::string(what) + " must be a matrix");
    IntMat m;
    for (const auto& row : j) m.push_back(read_int_vec(row, what));
    return m;
}

GroupPtr group_from_json(const json& j);

GroupElement element_from_json(const json& j, const GroupPtr& g) {
    if (!j.is_object() || !j.contains("coords"))
        fail(ErrorCode::Parse, "group element must be {\"coords\": [...]}");
    return make_element(g, read_int_vec(j["coords"], "coords"));
}

json element_to_json(const GroupElement& e) {
    return json{{"coords", e.coords}};
}

GroupPtr group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family")) fail(ErrorCode::Parse, "group needs a \"family\" field");
    std::string family = j["family"].get<std::string>();
    GroupPtr g;
    if (family == "free_abelian") {
        if (!j.contains("rank")) fail(ErrorCode::Parse, "free_abelian group needs \"rank\"");
        g = make_free_abelian(j["rank"].get<int>());
    } else if (family == "heisenberg3") {
        g = make_heisenberg3();
    } else if (family == "semidirect") {
        if (!j.contains("rank") || !j.contains("matrix"))
            fail(ErrorCode::Parse, "semidirect group needs \"rank\" and \"matrix\"");
        g = make_semidirect(j["rank"].get<int>(), read_int_mat(j["matrix"], "matrix"));
    } else {
        fail(ErrorCode::Parse, "unknown group family: " + family);
    }
    if (j.contains("generators")) {
        auto names = j["generators"].get<std::vector<std::string>>();
        if (static_cast<int>(names.size()) != g->generator_count())
            fail(ErrorCode::Parse, "wrong number of generator names");
        auto copy = std::make_shared<GroupDescriptor>(*g);
        copy->generator_names = std::move(names);
        g = copy;
    }
    if (j.contains("hirsch")) {
        int h = j["hirsch"].get<int>();
        if (h < 0) fail(ErrorCode::Parse, "hirsch number must be nonnegative");
        if (g->family == GroupFamily::FreeAbelian && h != g->rank)
            fail(ErrorCode::Parse, "free_abelian hirsch number must equal the rank");
        auto copy = std::make_shared<GroupDescriptor>(*g);
        copy->declared_hirsch = h;
        g = copy;
    }
    return g;
}

json group_to_json_obj(const GroupPtr& g) {
    json j;
    switch (g->family) {
        case GroupFamily::FreeAbelian:
            j["family"] = "free_abelian";
            j["rank"] = g->rank;
            break;
        case GroupFamily::Heisenberg3:
            j["family"] = "heisenberg3";
            break;
        case GroupFamily::SemidirectZnByZ:
            j["family"] = "semidirect";
            j["rank"] = g->rank;
            j["matrix"] = g->twist;
            break;
    }
    GroupPtr defaults;
    switch (g->family) {
        case GroupFamily::FreeAbelian: defaults = make_free_abelian(g->rank); break;
        case GroupFamily::Heisenberg3: defaults = make_heisenberg3(); break;
        case GroupFamily::SemidirectZnByZ: defaults = make_semidirect(g->rank, g->twist); break;
    }
    if (g->generator_names != defaults->generator_names) j["generators"] = g->generator_names;
    if (g->declared_hirsch != defaults->declared_hirsch) j["hirsch"] = g->declared_hirsch;
    return j;
}

Alphabet alphabet_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::Parse, "alphabet must be an array of strings");
    std::vector<std::string> symbols;
    for (const auto& s : j) {
        if (!s.is_string()) fail(ErrorCode::Parse, "alphabet symbols must be strings");
        symbols.push_back(s.get<std::string>());
    }
    return make_alphabet(std::move(symbols));
}

Pattern pattern_from_json(const json& j, const GroupPtr& g, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("support") || !j.contains("symbols"))
        fail(ErrorCode::Parse, "pattern needs \"support\" and \"symbols\"");
    const json& support = j["support"];
    const json& symbols = j["symbols"];
    if (!support.is_array() || !symbols.is_array() || support.size() != symbols.size())
        fail(ErrorCode::Parse, "pattern support and symbols must be parallel arrays");
    std::vector<PatternEntry> entries;
    for (std::size_t i = 0; i < support.size(); ++i) {
        int sym = alphabet.index_of(symbols[i].get<std::string>());
        if (sym < 0) fail(ErrorCode::Parse, "pattern symbol not in alphabet");
        entries.push_back({element_from_json(support[i], g), sym});
    }
    return make_pattern(g, std::move(entries));
}

json pattern_to_json(const Pattern& p, const Alphabet& alphabet) {
    json support = json::array();
    json symbols = json::array();
    for (const auto& e : p.entries) {
        support.push_back(element_to_json(e.cell));
        symbols.push_back(alphabet.symbols[e.symbol]);
    }
    return json{{"support", support}, {"symbols", symbols}};
}

} // namespace

GroupPtr parse_group(const std::string& text) {
    return guarded([&] { return group_from_json(parse_text(text)); });
}

std::string group_to_json(const GroupPtr& g) { return group_to_json_obj(g).dump(); }

Sft parse_sft(const std::string& text) {
    return guarded([&] {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("group") || !j.contains("alphabet") || !j.contains("forbidden"))
        fail(ErrorCode::Parse, "sft needs \"group\", \"alphabet\" and \"forbidden\"");
    GroupPtr g = group_from_json(j["group"]);
    Alphabet alphabet = alphabet_from_json(j["alphabet"]);
    if (!j["forbidden"].is_array()) fail(ErrorCode::Parse, "forbidden must be an array");
    std::vector<Pattern> forbidden;
    for (const auto& p : j["forbidden"]) forbidden.push_back(pattern_from_json(p, g, alphabet));
    Sft x = make_sft(g, alphabet, std::move(forbidden));
    if (j.contains("metadata") && j["metadata"].contains("product")) {
        const json& tag = j["metadata"]["product"];
        Sft::ProductTag t;
        t.dims = tag.at("dims").get<int>();
        t.base_alphabet = tag.at("base_alphabet").get<std::vector<std::string>>();
        t.projection = tag.at("projection").get<std::vector<int>>();
        if (t.base_alphabet.size() != t.projection.size())
            fail(ErrorCode::Parse, "product metadata arrays must be parallel");
        x.product_tag = std::move(t);
    }
    return x;
    });
}

std::string sft_to_json(const Sft& x) {
    json forbidden = json::array();
    for (const auto& p : x.forbidden) forbidden.push_back(pattern_to_json(p, x.alphabet));
    json j{{"group", group_to_json_obj(x.group)},
           {"alphabet", x.alphabet.symbols},
           {"forbidden", forbidden}};
    if (x.product_tag.has_value()) {
        j["metadata"] = json{{"product", json{{"dims", x.product_tag->dims},
                                              {"base_alphabet", x.product_tag->base_alphabet},
                                              {"projection", x.product_tag->projection}}}};
    }
    return j.dump();
}

Configuration parse_configuration(const std::string& text) {
    return guarded([&]() -> Configuration {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("group") || !j.contains("alphabet") || !j.contains("domain") ||
        !j.contains("values"))
        fail(ErrorCode::Parse, "configuration needs \"group\", \"alphabet\", \"domain\", \"values\"");
    GroupPtr g = group_from_json(j["group"]);
    Alphabet alphabet = alphabet_from_json(j["alphabet"]);
    std::vector<int> values;
    for (const auto& v : j["values"]) {
        int sym = alphabet.index_of(v.get<std::string>());
        if (sym < 0) fail(ErrorCode::Parse, "configuration value not in alphabet");
        values.push_back(sym);
    }
    const json& dom = j["domain"];
    if (!dom.is_object() || !dom.contains("kind")) fail(ErrorCode::Parse, "domain needs \"kind\"");
    std::string kind = dom["kind"].get<std::string>();
    if (kind == "torus") {
        if (!dom.contains("lattice")) fail(ErrorCode::Parse, "torus domain needs \"lattice\"");
        Lattice l(read_int_mat(dom["lattice"], "lattice"));
        return make_torus_configuration(g, alphabet, l, std::move(values));
    }
    if (kind == "ball") {
        if (dom.contains("radius")) {
            int r = dom["radius"].get<int>();
            return make_ball_configuration(g, alphabet, ball(g, r), std::move(values), r);
        }
        if (dom.contains("elements")) {
            std::vector<GroupElement> elems;
            for (const auto& e : dom["elements"]) elems.push_back(element_from_json(e, g));
            return make_ball_configuration(g, alphabet, std::move(elems), std::move(values));
        }
        fail(ErrorCode::Parse, "ball domain needs \"radius\" or \"elements\"");
    }
    fail(ErrorCode::Parse, "unknown domain kind: " + kind);
    });
}

std::string configuration_to_json(const Configuration& c) {
    json dom;
    if (c.is_torus()) {
        dom = json{{"kind", "torus"}, {"lattice", c.torus_lattice().basis()}};
    } else {
        const auto& bd = std::get<BallDomain>(c.domain);
        if (bd.radius.has_value()) {
            dom = json{{"kind", "ball"}, {"radius", *bd.radius}};
        } else {
            json elems = json::array();
            for (const auto& e : bd.elements) elems.push_back(element_to_json(e));
            dom = json{{"kind", "ball"}, {"elements", elems}};
        }
    }
    json values = json::array();
    for (int v : c.values) values.push_back(c.alphabet.symbols[v]);
    return json{{"group", group_to_json_obj(c.group)},
                {"alphabet", c.alphabet.symbols},
                {"domain", dom},
                {"values", values}}
        .dump();
}

namespace {

Homomorphism hom_from_json(const json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("images"))
        fail(ErrorCode::Parse, "homomorphism needs \"source\", \"target\", \"images\"");
    GroupPtr source = group_from_json(j["source"]);
    GroupPtr target = group_from_json(j["target"]);
    std::vector<GroupElement> images;
    for (const auto& e : j["images"]) images.push_back(element_from_json(e, target));
    HomKind kind = HomKind::General;
    if (j.contains("kind")) {
        std::string k = j["kind"].get<std::string>();
        if (k == "quotient") kind = HomKind::Quotient;
        else if (k == "embedding") kind = HomKind::Embedding;
        else if (k == "general") kind = HomKind::General;
        else fail(ErrorCode::Parse, "unknown homomorphism kind: " + k);
    }
    std::vector<GroupElement> kernel;
    if (j.contains("kernel_generators"))
        for (const auto& e : j["kernel_generators"]) kernel.push_back(element_from_json(e, source));
    Homomorphism h = make_hom(std::move(source), std::move(target), std::move(images), kind,
                              std::move(kernel));
    if (!check_hom(h)) fail(ErrorCode::Relation, "homomorphism violates a defining relation");
    return h;
}

json hom_to_json_obj(const Homomorphism& h) {
    json images = json::array();
    for (const auto& e : h.images) images.push_back(element_to_json(e));
    const char* kind = h.kind == HomKind::Quotient    ? "quotient"
                       : h.kind == HomKind::Embedding ? "embedding"
                                                      : "general";
    json j{{"source", group_to_json_obj(h.source)},
           {"target", group_to_json_obj(h.target)},
           {"images", images},
           {"kind", kind}};
    if (!h.kernel_generators.empty()) {
        json kernel = json::array();
        for (const auto& e : h.kernel_generators) kernel.push_back(element_to_json(e));
        j["kernel_generators"] = kernel;
    }
    return j;
}

} // namespace

Homomorphism parse_hom(const std::string& text) {
    return guarded([&] { return hom_from_json(parse_text(text)); });
}

std::string hom_to_json(const Homomorphism& h) { return hom_to_json_obj(h).dump(); }

std::vector<Homomorphism> parse_hom_chain(const std::string& text) {
    return guarded([&] {
    json j = parse_text(text);
    if (!j.is_array()) fail(ErrorCode::Parse, "homomorphism chain must be a JSON array");
    std::vector<Homomorphism> out;
    for (const auto& h : j) out.push_back(hom_from_json(h));
    return out;
    });
}

WangTileSet parse_tiles(const std::string& text) {
    return guarded([&] {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("tiles") || !j["tiles"].is_array())
        fail(ErrorCode::Parse, "tile set needs a \"tiles\" array");
    WangTileSet t;
    for (const auto& tile : j["tiles"]) {
        if (!tile.is_object() || !tile.contains("n") || !tile.contains("e") || !tile.contains("s") ||
            !tile.contains("w"))
            fail(ErrorCode::Parse, "each tile needs \"n\", \"e\", \"s\", \"w\" colors");
        t.tiles.push_back({tile["n"].get<std::string>(), tile["e"].get<std::string>(),
                           tile["s"].get<std::string>(), tile["w"].get<std::string>()});
    }
    if (t.tiles.empty()) fail(ErrorCode::Parse, "tile set must be nonempty");
    return t;
    });
}

std::string tiles_to_json(const WangTileSet& t) {
    json tiles = json::array();
    for (const auto& tile : t.tiles)
        tiles.push_back(json{{"n", tile.north}, {"e", tile.east}, {"s", tile.south}, {"w", tile.west}});
    return json{{"tiles", tiles}}.dump();
}

AutMatrix parse_aut_matrix(const std::string& text) {
    return guarded([&]() -> AutMatrix {
    // Inline row-major "a,b;c,d" unless it looks like JSON.
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] != '{') {
        IntMat m;
        std::stringstream ss(text);
        std::string row_text;
        while (std::getline(ss, row_text, ';')) {
            IntVec row;
            std::stringstream rs(row_text);
            std::string cell;
            while (std::getline(rs, cell, ',')) {
                try {
                    row.push_back(std::stoll(cell));
                } catch (const std::exception&) {
                    fail(ErrorCode::Parse, "bad matrix entry: " + cell);
                }
            }
            m.push_back(std::move(row));
        }
        if (m.empty()) fail(ErrorCode::Parse, "empty matrix text");
        return make_aut_matrix(std::move(m));
    }
    json j = parse_text(text);
    if (j.contains("matrix")) return make_aut_matrix(read_int_mat(j["matrix"], "matrix"));
    if (j.contains("shear")) {
        const json& s = j["shear"];
        if (!s.contains("u") || !s.contains("v")) fail(ErrorCode::Parse, "shear needs \"u\" and \"v\"");
        return shear(read_int_vec(s["u"], "u"), read_int_vec(s["v"], "v"));
    }
    fail(ErrorCode::Parse, "automorphism needs \"matrix\" or \"shear\"");
    });
}

std::vector<int> parse_projection(const std::string& text, const Alphabet& alphabet) {
    return guarded([&] {
    json j = parse_text(text);
    if (!j.is_object()) fail(ErrorCode::Parse, "projection must be an object of symbol -> 0/1");
    std::vector<int> out(alphabet.symbols.size(), -1);
    for (const auto& [key, value] : j.items()) {
        int idx = alphabet.index_of(key);
        if (idx < 0) fail(ErrorCode::Parse, "projection symbol not in alphabet: " + key);
        if (!value.is_number_integer()) fail(ErrorCode::Parse, "projection values must be integers");
        out[idx] = value.get<int>();
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] < 0)
            fail(ErrorCode::Relation, "projection missing symbol: " + alphabet.symbols[i]);
    return out;
    });
}

} // namespace polysft
