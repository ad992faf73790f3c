#include <doctest.h>

#include "test_util.hpp"

using namespace geoconn;

namespace {
ExactMatrix mat(FieldPtr f, std::vector<std::vector<int>> rows) {
    std::vector<std::vector<Fq>> conv;
    for (auto& r : rows) {
        std::vector<Fq> row;
        for (int v : r) row.push_back(f->from_int(v));
        conv.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(f, conv);
}
} // namespace

TEST_CASE("rref basics") {
    auto f3 = make_field(3);
    auto id = ExactMatrix::identity(f3, 2);
    auto r = id.rref();
    CHECK(r.rank == 2);
    CHECK(r.matrix == id);

    ExactMatrix z(f3, 3, 3);
    CHECK(z.rref().rank == 0);
    CHECK(z.rref().matrix == z);

    // second row is twice the first over F_3
    auto m = mat(f3, {{1, 2}, {2, 1}});
    auto rr = m.rref();
    CHECK(rr.rank == 1);
    CHECK(rr.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    auto f5 = make_field(5);
    SplitMix64 rng(7);
    for (int k = 0; k < 200; ++k) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        ExactMatrix m(f5, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, f5->element(rng.below(5)));
        auto once = m.rref();
        auto twice = once.matrix.rref();
        CHECK(once.matrix == twice.matrix);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("solve returns an exact witness, free variables zero") {
    auto f3 = make_field(3);
    auto m = mat(f3, {{1, 1, 0}, {0, 0, 1}});
    auto x = m.solve({f3->from_int(2), f3->from_int(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[1] == f3->zero()); // free variable convention
    CHECK(m.apply(*x) == std::vector<Fq>{f3->from_int(2), f3->from_int(1)});

    // inconsistent
    auto m2 = mat(f3, {{1, 1}, {2, 2}});
    CHECK_FALSE(m2.solve({f3->one(), f3->one()}).has_value());
}

TEST_CASE("nullspace examples") {
    auto f2 = make_field(2);
    CHECK(ExactMatrix::identity(f2, 3).nullspace_basis().empty());
    ExactMatrix z(f2, 2, 2);
    CHECK(z.nullspace_basis().size() == 2);
    auto m = mat(f2, {{1, 1}});
    auto ns = m.nullspace_basis();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Fq>{f2->one(), f2->one()});
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
    SplitMix64 rng(2024);
    std::size_t cases = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto f = make_field(p);
        for (int k = 0; k < 350; ++k) {
            std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
            ExactMatrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.set(i, j, f->element(rng.below(p)));
            auto ns = m.nullspace_basis();
            CHECK(m.rank() + ns.size() == c);
            for (auto& v : ns) {
                auto mv = m.apply(v);
                for (auto& e : mv) CHECK(f->is_zero(e));
            }
            // a consistent rhs: m * random vector
            std::vector<Fq> x0(c);
            for (auto& e : x0) e = f->element(rng.below(p));
            auto b = m.apply(x0);
            auto x = m.solve(b);
            REQUIRE(x.has_value());
            CHECK(m.apply(*x) == b);
            ++cases;
        }
    }
    CHECK(cases >= 1000);
}

TEST_CASE("row_span_basis is canonical") {
    auto f3 = make_field(3);
    std::vector<std::vector<Fq>> a{{f3->from_int(1), f3->from_int(2)},
                                   {f3->from_int(2), f3->from_int(1)}};
    std::vector<std::vector<Fq>> b{{f3->from_int(2), f3->from_int(1)}};
    CHECK(row_span_basis(f3, a, 2) == row_span_basis(f3, b, 2));
}
