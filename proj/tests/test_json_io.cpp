#include <doctest.h>

#include "core/constructions.hpp"
#include "core/digest.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/solver.hpp"
#include "test_util.hpp"

using namespace polysft;
using testutil::el;

TEST_CASE("group json: all three families round trip") {
    for (const char* text :
         {R"({"family":"free_abelian","rank":2})", R"({"family":"heisenberg3"})",
          R"({"family":"semidirect","matrix":[[2,1],[1,1]],"rank":2})"}) {
        GroupPtr g = parse_group(text);
        std::string out = group_to_json(g);
        CHECK(out == group_to_json(parse_group(out)));
    }
    CHECK(parse_group(R"({"family":"heisenberg3"})")->family == GroupFamily::Heisenberg3);
    CHECK(parse_group(R"({"family":"free_abelian","rank":3})")->rank == 3);
}

TEST_CASE("group json: invalid declarations are rejected") {
    CHECK_THROWS_AS(parse_group(R"({"family":"dihedral"})"), Error);
    CHECK_THROWS_AS(parse_group(R"({"family":"free_abelian"})"), Error);
    CHECK_THROWS_AS(parse_group(R"({"family":"semidirect","rank":2,"matrix":[[2,0],[0,1]]})"),
                    Error);
    CHECK_THROWS_AS(parse_group(R"({"family":"free_abelian","rank":2,"hirsch":5})"), Error);
    CHECK_THROWS_AS(parse_group(R"({"family":"free_abelian","rank":"two"})"), Error);
    CHECK_THROWS_AS(parse_group("not json at all"), Error);
}

TEST_CASE("group json: generator names survive a round trip") {
    GroupPtr g = parse_group(R"({"family":"free_abelian","generators":["x","y"],"rank":2})");
    CHECK(g->generator_names == std::vector<std::string>{"x", "y"});
    CHECK(group_to_json(g).find("generators") != std::string::npos);
}

TEST_CASE("sft json: schema example parses") {
    std::string text = R"({
        "group": {"family": "free_abelian", "rank": 2},
        "alphabet": ["a", "b"],
        "forbidden": [{"support": [{"coords": [0,0]}, {"coords": [1,0]}],
                       "symbols": ["a", "a"]}]
    })";
    Sft x = parse_sft(text);
    CHECK(x.alphabet.size() == 2);
    REQUIRE(x.forbidden.size() == 1);
    CHECK(x.forbidden[0].entries.size() == 2);
    CHECK(x.forbidden[0].entries[0].symbol == 0);
}

TEST_CASE("sft json: construction outputs reload unchanged") {
    auto z1 = make_free_abelian(1);
    Sft no_aa = make_sft(z1, make_alphabet({"a", "b"}),
                         {make_pattern(z1, {{el(z1, {0}), 0}, {el(z1, {1}), 0}})});
    auto z2 = make_free_abelian(2);
    Homomorphism emb = make_hom(z1, z2, {el(z2, {1, 0})}, HomKind::Embedding);
    std::vector<Sft> fixtures;
    fixtures.push_back(mod3_marker(2));
    fixtures.push_back(wang_to_sft(WangTileSet{{{"1", "2", "1", "2"}, {"2", "1", "2", "1"}}}));
    fixtures.push_back(subgroup_induce(no_aa, emb));
    fixtures.push_back(product(mod3_marker(2), mod3_marker(2)));
    fixtures.push_back(extend_periodic(mod3_marker(2), 3));
    fixtures.push_back(automorphism_free_product(
        make_sft(z2, make_alphabet({"p", "q"}), {}), {0, 1}, 2));
    auto h3 = make_heisenberg3();
    Homomorphism ab = make_hom(h3, z2, {el(z2, {1, 0}), el(z2, {0, 1}), el(z2, {0, 0})},
                               HomKind::Quotient, {el(h3, {0, 0, 1})});
    fixtures.push_back(quotient_lift(mod3_marker(2), ab));
    for (const auto& x : fixtures) {
        std::string once = sft_to_json(x);
        std::string twice = sft_to_json(parse_sft(once));
        CHECK(once == twice);
    }
}

TEST_CASE("sft json: product metadata round trips") {
    auto z2 = make_free_abelian(2);
    Sft x = automorphism_free_product(make_sft(z2, make_alphabet({"p", "q"}), {}), {1, 0}, 2);
    Sft reparsed = parse_sft(sft_to_json(x));
    REQUIRE(reparsed.product_tag.has_value());
    CHECK(reparsed.product_tag->projection == std::vector<int>{1, 0});
    CHECK(reparsed.product_tag->base_alphabet == std::vector<std::string>{"p", "q"});
}

TEST_CASE("configuration json: torus, canonical ball, explicit elements") {
    Sft m = mod3_marker(2);
    Lattice l({{3, 0}, {0, 3}});
    std::vector<int> vals;
    for (const auto& r : l.residues()) vals.push_back(static_cast<int>(r[0] * 3 + r[1]));
    Configuration torus = make_torus_configuration(m.group, m.alphabet, l, vals);
    std::string tj = configuration_to_json(torus);
    CHECK(tj == configuration_to_json(parse_configuration(tj)));

    auto v = check_ball_emptiness(m, 1);
    REQUIRE(v.kind == VerdictKind::Witness);
    std::string bj = configuration_to_json(*v.witness);
    CHECK(bj.find("\"radius\":1") != std::string::npos);
    CHECK(bj == configuration_to_json(parse_configuration(bj)));

    Configuration moved = translate(el(m.group, {1, 0}), *v.witness);
    std::string ej = configuration_to_json(moved);
    CHECK(ej.find("\"elements\"") != std::string::npos);
    CHECK(ej == configuration_to_json(parse_configuration(ej)));
}

TEST_CASE("configuration json: value count must match the domain") {
    CHECK_THROWS_AS(parse_configuration(R"({
        "group": {"family":"free_abelian","rank":1},
        "alphabet": ["a"],
        "domain": {"kind":"torus","lattice":[[2]]},
        "values": ["a","a","a"]
    })"),
                    Error);
    CHECK_THROWS_AS(parse_configuration(R"({
        "group": {"family":"free_abelian","rank":1},
        "alphabet": ["a"],
        "domain": {"kind":"ball","radius":1},
        "values": ["a","b","a"]
    })"),
                    Error);
}

TEST_CASE("hom json: round trip and relation checking") {
    std::string text = R"({
        "source": {"family": "heisenberg3"},
        "target": {"family": "free_abelian", "rank": 2},
        "images": [{"coords":[1,0]}, {"coords":[0,1]}, {"coords":[0,0]}],
        "kind": "quotient",
        "kernel_generators": [{"coords":[0,0,1]}]
    })";
    Homomorphism h = parse_hom(text);
    CHECK(h.kind == HomKind::Quotient);
    std::string out = hom_to_json(h);
    CHECK(out == hom_to_json(parse_hom(out)));

    // images that break the commutator relation are rejected at parse time
    CHECK_THROWS_AS(parse_hom(R"({
        "source": {"family": "free_abelian", "rank": 2},
        "target": {"family": "heisenberg3"},
        "images": [{"coords":[1,0,0]}, {"coords":[0,1,0]}],
        "kind": "embedding"
    })"),
                    Error);
    CHECK_THROWS_AS(parse_hom(R"({
        "source": {"family": "free_abelian", "rank": 1},
        "target": {"family": "free_abelian", "rank": 1},
        "images": [{"coords":[1]}],
        "kind": "quotient"
    })"),
                    Error); // quotient without kernel generators
}

TEST_CASE("hom chain json") {
    std::string text = R"([
        {"source": {"family": "heisenberg3"},
         "target": {"family": "free_abelian", "rank": 2},
         "images": [{"coords":[1,0]}, {"coords":[0,1]}, {"coords":[0,0]}],
         "kind": "quotient",
         "kernel_generators": [{"coords":[0,0,1]}]}
    ])";
    auto chain = parse_hom_chain(text);
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].kind == HomKind::Quotient);
    CHECK_THROWS_AS(parse_hom_chain(R"({"not":"an array"})"), Error);
}

TEST_CASE("tiles json") {
    std::string text = R"({"tiles":[{"n":"1","e":"2","s":"1","w":"2"},
                                    {"n":"2","e":"1","s":"2","w":"1"}]})";
    WangTileSet t = parse_tiles(text);
    REQUIRE(t.tiles.size() == 2);
    CHECK(t.tiles[0].east == "2");
    std::string out = tiles_to_json(t);
    CHECK(out == tiles_to_json(parse_tiles(out)));
    CHECK_THROWS_AS(parse_tiles(R"({"tiles":[]})"), Error);
    CHECK_THROWS_AS(parse_tiles(R"({"tiles":[{"n":"1"}]})"), Error);
}

TEST_CASE("automorphism specs: text, matrix json, shear json") {
    CHECK(parse_aut_matrix("0,1;1,0").entries == IntMat{{0, 1}, {1, 0}});
    CHECK(parse_aut_matrix("-1,0;0,-1").entries == IntMat{{-1, 0}, {0, -1}});
    CHECK(parse_aut_matrix(R"({"matrix":[[1,0],[1,1]]})").entries == IntMat{{1, 0}, {1, 1}});
    CHECK(parse_aut_matrix(R"({"shear":{"u":[1,0],"v":[0,1]}})").entries ==
          IntMat{{1, 0}, {1, 1}});
    CHECK_THROWS_AS(parse_aut_matrix("2,0;0,1"), Error);   // not unimodular
    CHECK_THROWS_AS(parse_aut_matrix("1,junk;0,1"), Error);
    CHECK_THROWS_AS(parse_aut_matrix(R"({"rotate":90})"), Error);
}

TEST_CASE("projection json") {
    Alphabet ab = make_alphabet({"p", "q"});
    CHECK(parse_projection(R"({"p":0,"q":1})", ab) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(parse_projection(R"({"p":0})", ab), Error);          // incomplete
    CHECK_THROWS_AS(parse_projection(R"({"p":0,"r":1})", ab), Error);    // unknown symbol
}

TEST_CASE("digest: stable FNV-1a values") {
    CHECK(fnv1a64("", 0) == 14695981039346656037ULL);
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("a") == "af63dc4c8601ec8c");
    CHECK(digest_hex(sft_to_json(mod3_marker(2))) ==
          digest_hex(sft_to_json(mod3_marker(2))));
}

TEST_CASE("canonical serialization is key-order independent") {
    std::string a = R"({"group":{"family":"free_abelian","rank":1},"alphabet":["x"],"forbidden":[]})";
    std::string b = R"({"forbidden":[],"alphabet":["x"],"group":{"rank":1,"family":"free_abelian"}})";
    CHECK(sft_to_json(parse_sft(a)) == sft_to_json(parse_sft(b)));
}
