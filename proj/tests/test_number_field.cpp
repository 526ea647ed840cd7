#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace covsys;
using testutil::quadMulOracle;
using testutil::randomElem;

TEST_CASE("rationals are the degree-1 field") {
    auto q = NumberField::rationals();
    CHECK(q->degree() == 1);
    CHECK(q->one() == Elem{{1}});
    CHECK(q->mul(q->fromInt(3), q->fromInt(4)) == q->fromInt(12));
    CHECK(q->add(q->fromInt(5), q->fromInt(-5)) == q->zero());
}

TEST_CASE("rationals arithmetic matches native integers") {
    auto q = NumberField::rationals();
    std::mt19937_64 rng(7);
    for (int k = 0; k < 1000; ++k) {
        const i64 a = static_cast<i64>(rng() % 2001) - 1000;
        const i64 b = static_cast<i64>(rng() % 2001) - 1000;
        CHECK(q->add(q->fromInt(a), q->fromInt(b)) == q->fromInt(a + b));
        CHECK(q->mul(q->fromInt(a), q->fromInt(b)) == q->fromInt(a * b));
        CHECK(q->neg(q->fromInt(a)) == q->fromInt(-a));
    }
}

TEST_CASE("quadratic field tables") {
    SUBCASE("gaussian integers") {
        auto zi = NumberField::quadratic(-1);
        CHECK(zi->tableEntry(1, 1) == Elem{{-1, 0}});
    }
    SUBCASE("eisenstein-style d=-3") {
        // ((1+sqrt(-3))/2)^2 expands to -1 + (1+sqrt(-3))/2.
        auto f = NumberField::quadratic(-3);
        CHECK(f->tableEntry(1, 1) == Elem{{-1, 1}});
    }
    SUBCASE("real quadratic d=2") {
        auto f = NumberField::quadratic(2);
        CHECK(f->tableEntry(1, 1) == Elem{{2, 0}});
    }
    SUBCASE("d=5 uses the half-integer basis") {
        auto f = NumberField::quadratic(5);
        CHECK(f->tableEntry(1, 1) == Elem{{1, 1}});
    }
}

TEST_CASE("quadratic constructor rejects bad parameters") {
    CHECK_THROWS_AS(NumberField::quadratic(0), Error);
    CHECK_THROWS_AS(NumberField::quadratic(1), Error);
    CHECK_THROWS_AS(NumberField::quadratic(4), Error);
    CHECK_THROWS_AS(NumberField::quadratic(-4), Error);
    CHECK_THROWS_AS(NumberField::quadratic(12), Error);
    CHECK_THROWS_AS(NumberField::quadratic(18), Error);
}

TEST_CASE("multiplication table constructor validates the axioms") {
    // Identity row broken.
    std::vector<std::vector<Elem>> notIdentity{
        {Elem{{2, 0}}, Elem{{0, 1}}},
        {Elem{{0, 1}}, Elem{{2, 0}}},
    };
    CHECK_THROWS_AS(NumberField({"1", "w"}, notIdentity), Error);
    // Asymmetric table.
    std::vector<std::vector<Elem>> asym{
        {Elem{{1, 0}}, Elem{{0, 1}}},
        {Elem{{1, 1}}, Elem{{2, 0}}},
    };
    CHECK_THROWS_AS(NumberField({"1", "w"}, asym), Error);
}

TEST_CASE("element products match the symbolic oracle") {
    SUBCASE("(1+i)(1-i) = 2") {
        auto zi = NumberField::quadratic(-1);
        const Elem a{{1, 1}}, b{{1, -1}};
        CHECK(zi->mul(a, b) == Elem{{2, 0}});
        CHECK(zi->mul(a, b) == quadMulOracle(-1, 0, a, b));
    }
    SUBCASE("(1+w)(1-w) = -1 in Q(sqrt 2)") {
        auto f = NumberField::quadratic(2);
        const Elem a{{1, 1}}, b{{1, -1}};
        CHECK(f->mul(a, b) == Elem{{-1, 0}});
    }
    SUBCASE("random products across shipped fields") {
        std::mt19937_64 rng(11);
        for (i64 d : {-1, -3, -5, 2, 5}) {
            auto f = NumberField::quadratic(d);
            const i64 u = f->tableEntry(1, 1).c[0];
            const i64 v = f->tableEntry(1, 1).c[1];
            for (int k = 0; k < 200; ++k) {
                const Elem a = randomElem(rng, 2, -50, 50);
                const Elem b = randomElem(rng, 2, -50, 50);
                CHECK(f->mul(a, b) == quadMulOracle(u, v, a, b));
            }
        }
    }
}

TEST_CASE("identity and dimension checks") {
    auto zi = NumberField::quadratic(-1);
    const Elem a{{3, -2}};
    CHECK(zi->mul(a, zi->one()) == a);
    CHECK_THROWS_AS(zi->add(a, Elem{{1}}), Error);
    CHECK_THROWS_AS(zi->mul(a, Elem{{1, 2, 3}}), Error);
}

TEST_CASE("multiplication distributes over addition") {
    std::mt19937_64 rng(23);
    std::vector<FieldPtr> fields{NumberField::rationals(), NumberField::quadratic(-1),
                                 NumberField::quadratic(-3), NumberField::quadratic(-5),
                                 NumberField::quadratic(2)};
    for (const auto& f : fields) {
        for (int k = 0; k < 1000; ++k) {
            const Elem a = randomElem(rng, f->degree(), -50, 50);
            const Elem b = randomElem(rng, f->degree(), -50, 50);
            const Elem c = randomElem(rng, f->degree(), -50, 50);
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(a, b) == f->mul(b, a));
        }
    }
}

TEST_CASE("overflow aborts with a distinct error") {
    auto q = NumberField::rationals();
    const Elem big{{INT64_MAX / 2 + 1}};
    try {
        (void)q->mul(big, q->fromInt(2));
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
}
