#include <doctest.h>

#include <set>

#include "core/error.hpp"
#include "core/hom.hpp"
#include "test_util.hpp"

using namespace polysft;
using testutil::el;
using testutil::HeisMatrix;

TEST_CASE("multiply: free abelian is componentwise addition") {
    auto z2 = make_free_abelian(2);
    CHECK(multiply(el(z2, {1, 2}), el(z2, {-1, 3})) == el(z2, {0, 5}));
}

TEST_CASE("multiply: identity law on Heisenberg3") {
    auto h3 = make_heisenberg3();
    auto a = el(h3, {5, -2, 7});
    CHECK(multiply(identity_element(h3), a) == a);
    CHECK(multiply(a, identity_element(h3)) == a);
}

TEST_CASE("multiply: Heisenberg3 matches the unitriangular matrix model") {
    auto h3 = make_heisenberg3();
    CHECK(multiply(el(h3, {1, 0, 0}), el(h3, {0, 1, 0})) == el(h3, {1, 1, 1}));
    auto gen = testutil::rng();
    std::uniform_int_distribution<std::int64_t> d(-5, 5);
    for (int i = 0; i < 200; ++i) {
        GroupElement a = el(h3, {d(gen), d(gen), d(gen)});
        GroupElement b = el(h3, {d(gen), d(gen), d(gen)});
        HeisMatrix expect = HeisMatrix::from(a).times(HeisMatrix::from(b));
        CHECK(expect.matches(multiply(a, b)));
    }
}

TEST_CASE("multiply: group mismatch is rejected") {
    auto z2 = make_free_abelian(2);
    auto z3 = make_free_abelian(3);
    CHECK_THROWS_AS(multiply(el(z2, {0, 0}), el(z3, {0, 0, 0})), Error);
}

TEST_CASE("inverse: examples") {
    auto z3 = make_free_abelian(3);
    CHECK(inverse(el(z3, {1, -2, 0})) == el(z3, {-1, 2, 0}));

    auto h3 = make_heisenberg3();
    GroupElement a = el(h3, {1, 1, 1});
    CHECK(inverse(a) == el(h3, {-1, -1, 0}));
    CHECK(is_identity(multiply(a, inverse(a))));
    CHECK(HeisMatrix::from(a).inv().matches(inverse(a)));
    CHECK(inverse(identity_element(h3)) == identity_element(h3));
}

TEST_CASE("semidirect multiplication and inverses") {
    auto sd = make_semidirect(2, {{2, 1}, {1, 1}});
    // t * e1 * t^-1 should equal the first twist column (2,1)
    auto t = generator(sd, 2), e1 = generator(sd, 0);
    auto conj = multiply(multiply(t, e1), inverse(t));
    CHECK(conj == el(sd, {2, 1, 0}));
    auto gen = testutil::rng(7);
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    for (int i = 0; i < 100; ++i) {
        GroupElement a = el(sd, {d(gen), d(gen), d(gen)});
        CHECK(is_identity(multiply(a, inverse(a))));
        CHECK(is_identity(multiply(inverse(a), a)));
    }
    CHECK_THROWS_AS(make_semidirect(2, {{2, 0}, {0, 1}}), Error); // det 2
}

TEST_CASE("ball: small free abelian examples") {
    auto z1 = make_free_abelian(1);
    auto b1 = ball(z1, 1);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == el(z1, {-1}));
    CHECK(b1[1] == el(z1, {0}));
    CHECK(b1[2] == el(z1, {1}));
    CHECK(ball(make_free_abelian(2), 1).size() == 5);
}

namespace {

// Independent oracle: all words of length <= r over the generator alphabet,
// reduced in the matrix model.
std::size_t heis_word_ball_size(int r) {
    std::set<std::array<std::int64_t, 3>> seen;
    std::vector<HeisMatrix> gens = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                    {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<HeisMatrix> frontier = {{0, 0, 0}};
    seen.insert({0, 0, 0});
    for (int step = 0; step < r; ++step) {
        std::vector<HeisMatrix> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                HeisMatrix p = w.times(g);
                if (seen.insert({p.x, p.y, p.z}).second) next.push_back(p);
            }
        frontier = next;
    }
    return seen.size();
}

} // namespace

TEST_CASE("ball: Heisenberg3 radius 2 golden count") {
    auto h3 = make_heisenberg3();
    CHECK(ball(h3, 1).size() == 7);
    std::size_t oracle = heis_word_ball_size(2);
    CHECK(oracle == 29); // golden fixture
    CHECK(ball(h3, 2).size() == oracle);
    CHECK(ball(h3, 3).size() == heis_word_ball_size(3));
}

TEST_CASE("ball: monotone and closed under inverses") {
    for (const auto& g : {make_free_abelian(2), make_heisenberg3(),
                          make_semidirect(2, {{2, 1}, {1, 1}})}) {
        auto b2 = ball(g, 2);
        auto b3 = ball(g, 3);
        std::set<IntVec> b3set;
        for (const auto& e : b3) b3set.insert(e.coords);
        for (const auto& e : b2) {
            CHECK(b3set.count(e.coords) == 1);
        }
        std::set<IntVec> b2set;
        for (const auto& e : b2) b2set.insert(e.coords);
        for (const auto& e : b2) CHECK(b2set.count(inverse(e).coords) == 1);
    }
}

TEST_CASE("group axioms on small balls") {
    for (const auto& g : {make_free_abelian(2), make_heisenberg3(),
                          make_semidirect(2, {{2, 1}, {1, 1}})}) {
        auto b = ball(g, 2);
        auto e = identity_element(g);
        for (const auto& a : b) {
            CHECK(multiply(e, a) == a);
            CHECK(is_identity(multiply(a, inverse(a))));
        }
        // associativity, spot-checked exhaustively at radius 1
        auto b1 = ball(g, 1);
        for (const auto& a : b1)
            for (const auto& x : b1)
                for (const auto& y : b1)
                    CHECK(multiply(multiply(a, x), y) == multiply(a, multiply(x, y)));
    }
}

TEST_CASE("apply_hom: abelianization drops the center coordinate") {
    auto h3 = make_heisenberg3();
    auto z2 = make_free_abelian(2);
    Homomorphism ab = make_hom(h3, z2,
                               {el(z2, {1, 0}), el(z2, {0, 1}), el(z2, {0, 0})},
                               HomKind::Quotient, {el(h3, {0, 0, 1})});
    CHECK(check_hom(ab));
    CHECK(apply_hom(ab, el(h3, {2, 3, 7})) == el(z2, {2, 3}));
    auto gen = testutil::rng(11);
    std::uniform_int_distribution<std::int64_t> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
        GroupElement a = el(h3, {d(gen), d(gen), d(gen)});
        CHECK(apply_hom(ab, a) == el(z2, {a.coords[0], a.coords[1]}));
    }
}

TEST_CASE("apply_hom: identity and embedding examples") {
    auto z2 = make_free_abelian(2);
    Homomorphism id = make_hom(z2, z2, {el(z2, {1, 0}), el(z2, {0, 1})});
    CHECK(apply_hom(id, el(z2, {4, -1})) == el(z2, {4, -1}));

    auto z1 = make_free_abelian(1);
    Homomorphism emb = make_hom(z1, z2, {el(z2, {1, 0})}, HomKind::Embedding);
    CHECK(apply_hom(emb, el(z1, {5})) == el(z2, {5, 0}));
}

TEST_CASE("apply_hom is multiplicative on ball(source, 2)") {
    auto h3 = make_heisenberg3();
    auto z2 = make_free_abelian(2);
    std::vector<Homomorphism> homs;
    homs.push_back(make_hom(h3, z2, {el(z2, {1, 0}), el(z2, {0, 1}), el(z2, {0, 0})},
                            HomKind::Quotient, {el(h3, {0, 0, 1})}));
    homs.push_back(make_hom(z2, h3, {el(h3, {1, 0, 0}), el(h3, {0, 0, 1})}, HomKind::Embedding));
    auto sd = make_semidirect(2, {{2, 1}, {1, 1}});
    homs.push_back(make_hom(sd, sd,
                            {el(sd, {1, 0, 0}), el(sd, {0, 1, 0}), el(sd, {0, 0, 1})}));
    for (const auto& h : homs) {
        REQUIRE(check_hom(h));
        auto b = ball(h.source, 2);
        for (const auto& a : b)
            for (const auto& bb : b)
                CHECK(apply_hom(h, multiply(a, bb)) ==
                      multiply(apply_hom(h, a), apply_hom(h, bb)));
    }
}

TEST_CASE("check_hom catches relation violations") {
    auto h3 = make_heisenberg3();
    auto z2 = make_free_abelian(2);
    // e1 -> a, e2 -> b do not commute in Heisenberg3
    Homomorphism bad = make_hom(z2, h3, {el(h3, {1, 0, 0}), el(h3, {0, 1, 0})});
    CHECK_FALSE(check_hom(bad));

    Homomorphism id3 = make_hom(h3, h3,
                                {el(h3, {1, 0, 0}), el(h3, {0, 1, 0}), el(h3, {0, 0, 1})});
    CHECK(check_hom(id3));

    // Heisenberg map sending the commutator to something else
    Homomorphism skew = make_hom(h3, h3,
                                 {el(h3, {1, 0, 0}), el(h3, {0, 1, 0}), el(h3, {0, 0, -1})});
    CHECK_FALSE(check_hom(skew));

    auto sd = make_semidirect(2, {{2, 1}, {1, 1}});
    // wrong conjugation action: swap the lattice generator images
    Homomorphism sdbad = make_hom(sd, sd,
                                  {el(sd, {0, 1, 0}), el(sd, {1, 0, 0}), el(sd, {0, 0, 1})});
    CHECK_FALSE(check_hom(sdbad));

    // quotient with kernel generator not mapping to identity
    Homomorphism badker = make_hom(h3, z2,
                                   {el(z2, {1, 0}), el(z2, {0, 1}), el(z2, {0, 0})},
                                   HomKind::Quotient, {el(h3, {1, 0, 0})});
    CHECK_FALSE(check_hom(badker));
}

TEST_CASE("word norms via breadth-first search") {
    auto h3 = make_heisenberg3();
    auto norms = word_norms(h3, {identity_element(h3), el(h3, {1, 0, 0}), el(h3, {1, 1, 1}),
                                 el(h3, {0, 0, 2})});
    CHECK(norms == std::vector<int>{0, 1, 2, 2});
}
