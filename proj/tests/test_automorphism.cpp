#include <doctest.h>

#include "core/automorphism.hpp"
#include "core/constructions.hpp"
#include "core/error.hpp"
#include "core/solver.hpp"
#include "test_util.hpp"

using namespace polysft;
using testutil::el;

namespace {

Configuration mod3_point2() {
    Sft m = mod3_marker(2);
    Lattice l({{3, 0}, {0, 3}});
    std::vector<int> vals;
    for (const auto& r : l.residues()) vals.push_back(static_cast<int>(r[0] * 3 + r[1]));
    return make_torus_configuration(m.group, m.alphabet, l, vals);
}

// random integer vector, then an orthogonal partner built from two slots
std::pair<IntVec, IntVec> random_orthogonal_pair(std::mt19937_64& gen, int n) {
    std::uniform_int_distribution<std::int64_t> d(-4, 4);
    while (true) {
        IntVec v(n);
        bool zero = true;
        for (auto& x : v) {
            x = d(gen);
            if (x != 0) zero = false;
        }
        if (zero) continue;
        std::uniform_int_distribution<int> slot(0, n - 1);
        int i = slot(gen), j = slot(gen);
        if (i == j) continue;
        IntVec u(n, 0);
        u[i] = v[j];
        u[j] = -v[i];
        if (dot(u, v) != 0) continue; // never happens, kept as a guard
        return {u, v};
    }
}

} // namespace

TEST_CASE("make_aut_matrix insists on unimodularity") {
    CHECK_THROWS_AS(make_aut_matrix({{2, 0}, {0, 1}}), Error);
    CHECK(make_aut_matrix({{0, 1}, {1, 0}}).dim() == 2);
}

TEST_CASE("apply_automorphism: identity is a no-op") {
    Configuration c = mod3_point2();
    AutMatrix id = make_aut_matrix(identity_matrix(2));
    CHECK(apply_automorphism(id, c).values == c.values);
}

TEST_CASE("apply_automorphism: -I differs from every translate of the mod-3 point") {
    Configuration c = mod3_point2();
    AutMatrix neg = make_aut_matrix({{-1, 0}, {0, -1}});
    Configuration image = apply_automorphism(neg, c);
    const Lattice& l = c.torus_lattice();
    // direct residue table: image(p) = c(-p)
    for (const auto& r : l.residues()) {
        IntVec mirrored = l.reduce(vec_neg(r));
        CHECK(image.values[l.residue_index(r)] == c.values[l.residue_index(mirrored)]);
    }
    for (const auto& t : l.residues()) {
        Configuration moved = translate(GroupElement{c.group, t}, c);
        CHECK(moved.values != image.values);
    }
}

TEST_CASE("apply_automorphism: shear fixes configurations constant along e1") {
    auto z2 = make_free_abelian(2);
    Alphabet ab = make_alphabet({"a", "b", "c"});
    std::vector<GroupElement> box;
    std::vector<int> vals;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            box.push_back(el(z2, {x, y}));
            vals.push_back(y % 3); // depends on y only
        }
    Configuration c = make_ball_configuration(z2, ab, box, vals);
    AutMatrix m = shear({1, 0}, {0, 1});
    Configuration image = apply_automorphism(m, c);
    for (std::size_t i = 0; i < image.ball_elements().size(); ++i) {
        const auto& g = image.ball_elements()[i];
        CHECK(image.values[i] == *value_at(c, g));
    }
}

TEST_CASE("apply_automorphism: torus lattice must be preserved") {
    auto z2 = make_free_abelian(2);
    Alphabet ab = make_alphabet({"a", "b"});
    Lattice stripes({{1, 0}, {0, 2}});
    Configuration c = make_torus_configuration(z2, ab, stripes, {0, 1});
    AutMatrix swap = make_aut_matrix({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(apply_automorphism(swap, c), Error);
}

TEST_CASE("apply_automorphism: empty transformed window is an error") {
    auto z2 = make_free_abelian(2);
    Alphabet ab = make_alphabet({"a"});
    Configuration c = make_ball_configuration(z2, ab, {el(z2, {5, 5})}, {0});
    AutMatrix neg = make_aut_matrix({{-1, 0}, {0, -1}});
    CHECK_THROWS_AS(apply_automorphism(neg, c), Error);
}

TEST_CASE("shear: explicit 2x2 example and inverses") {
    AutMatrix m = shear({1, 0}, {0, 1});
    CHECK(m.entries == IntMat{{1, 0}, {1, 1}});
    // row convention: e2 maps to e2 + u
    CHECK(row_times_matrix({0, 1}, m.entries) == IntVec{1, 1});
    CHECK(row_times_matrix({1, 0}, m.entries) == IntVec{1, 0});

    AutMatrix minus = shear({-1, 0}, {0, 1});
    CHECK(aut_multiply(m, minus).entries == identity_matrix(2));
    CHECK(aut_inverse(m).entries == minus.entries);
}

TEST_CASE("shear: determinant one for random orthogonal pairs up to rank 4") {
    auto gen = testutil::rng(42);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            auto [u, v] = random_orthogonal_pair(gen, n);
            AutMatrix m = shear(u, v);
            CHECK(determinant(m.entries) == 1);
        }
}

TEST_CASE("shear: argument validation") {
    CHECK_THROWS_AS(shear({1, 0}, {0, 0}), Error); // zero direction
    CHECK_THROWS_AS(shear({1, 1}, {0, 1}), Error); // not orthogonal
}

TEST_CASE("shear fixes the hyperplane orthogonal to v") {
    auto gen = testutil::rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        auto [u, v] = random_orthogonal_pair(gen, 2);
        AutMatrix m = shear(u, v);
        for (std::int64_t x = -2; x <= 2; ++x)
            for (std::int64_t y = -2; y <= 2; ++y) {
                IntVec g = {x, y};
                if (dot(g, v) != 0) continue;
                CHECK(row_times_matrix(g, m.entries) == g);
            }
    }
}

TEST_CASE("a configuration with period p*e1 is fixed by shear(p*e1, v)") {
    auto z2 = make_free_abelian(2);
    Alphabet ab = make_alphabet({"a", "b", "c"});
    Lattice l({{2, 0}, {0, 3}});
    // any coloring of this torus has period 2*e1
    std::vector<int> vals = {0, 1, 2, 2, 0, 1};
    Configuration c = make_torus_configuration(z2, ab, l, vals);
    AutMatrix m = shear({2, 0}, {0, 1});
    CHECK(apply_automorphism(m, c).values == c.values);
}

TEST_CASE("apply_automorphism composes contravariantly in the row convention") {
    Configuration c = mod3_point2();
    std::vector<AutMatrix> sample = {
        make_aut_matrix({{0, 1}, {1, 0}}),
        make_aut_matrix({{-1, 0}, {0, -1}}),
        shear({1, 0}, {0, 1}),
        shear({0, 2}, {1, 0}),
        make_aut_matrix({{2, 1}, {1, 1}}),
    };
    for (const auto& m1 : sample)
        for (const auto& m2 : sample) {
            Configuration lhs = apply_automorphism(aut_multiply(m1, m2), c);
            Configuration rhs = apply_automorphism(m1, apply_automorphism(m2, c));
            CHECK(lhs.values == rhs.values);
        }
}

TEST_CASE("div_witness_check: identity is consistent, -I is refuted on the mod-3 marker") {
    Sft m = mod3_marker(2);
    Configuration c = mod3_point2();
    CHECK(div_witness_check(m, c, make_aut_matrix(identity_matrix(2))) == DivCheck::Consistent);
    CHECK(div_witness_check(m, c, make_aut_matrix({{-1, 0}, {0, -1}})) == DivCheck::Refuted);
}

TEST_CASE("div_witness_check: the full shift never refutes") {
    auto z2 = make_free_abelian(2);
    Sft full = make_sft(z2, make_alphabet({"a", "b"}), {});
    Lattice l({{3, 0}, {0, 3}});
    std::vector<int> vals = {0, 1, 0, 1, 1, 0, 0, 0, 1};
    Configuration c = make_torus_configuration(z2, full.alphabet, l, vals);
    for (const auto& m : {make_aut_matrix({{0, 1}, {1, 0}}), make_aut_matrix({{-1, 0}, {0, -1}}),
                          shear({1, 0}, {0, 1})})
        CHECK(div_witness_check(full, c, m) == DivCheck::Consistent);
}

TEST_CASE("div_witness_check requires an admissible configuration") {
    Sft m = mod3_marker(2);
    Lattice l({{3, 0}, {0, 3}});
    std::vector<int> vals(9, 0); // constant 00 violates the successor rule
    Configuration bad = make_torus_configuration(m.group, m.alphabet, l, vals);
    CHECK_THROWS_AS(div_witness_check(m, bad, make_aut_matrix(identity_matrix(2))), Error);
}
