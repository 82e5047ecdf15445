#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "nambu/errors.hpp"
#include "nambu/lie.hpp"

using nambu::LieAlgebra;
using nambu::Rational;
using nambu::Tensor;

namespace {

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

// sl(2) with [h,e] = 3e instead of 2e: antisymmetry intact, Jacobi broken.
std::shared_ptr<const LieAlgebra> perturbed_sl2() {
    auto sl2 = LieAlgebra::builtin("sl", 2);
    Tensor f = sl2->f();
    std::size_t h = sl2->label_index("h"), e = sl2->label_index("e");
    f.at({e, h, e}) = 3;
    f.at({e, e, h}) = -3;
    return std::make_shared<LieAlgebra>(sl2->basis_labels(), f);
}

}  // namespace

TEST_CASE("builtins satisfy the Jacobi identity") {
    for (auto& [name, size] : std::vector<std::pair<std::string, std::size_t>>{
             {"abelian", 1}, {"abelian", 3}, {"abelian", 5},
             {"heisenberg", 3}, {"heisenberg", 5},
             {"sl", 2}, {"gl", 2}, {"gl", 3}, {"affine1", 2}}) {
        CAPTURE(name);
        CAPTURE(size);
        auto report = LieAlgebra::builtin(name, size)->check_jacobi();
        CHECK(report.passed());
    }
}

TEST_CASE("perturbed sl(2) fails Jacobi with a named witness") {
    auto report = perturbed_sl2()->check_jacobi();
    CHECK_FALSE(report.passed());
    // every violation carries the (a,b,c,k) tuple and a nonzero residual
    for (const auto& v : report.violations) {
        CHECK(v.indices.size() == 4);
        CHECK(v.residual != "0");
        CHECK_FALSE(v.residual.empty());
    }
}

TEST_CASE("construction rejects a non-antisymmetric tensor") {
    Tensor f({2, 2, 2});
    f.at({0, 0, 1}) = 1;  // f^1_{12} = 1 with no matching f^1_{21} = -1
    CHECK_THROWS_AS(LieAlgebra({"x", "y"}, f), nambu::ConfigError);
}

TEST_CASE("builtin rejects unknown names and invalid sizes") {
    CHECK_THROWS_AS(LieAlgebra::builtin("nosuch", 2), nambu::ConfigError);
    CHECK_THROWS_AS(LieAlgebra::builtin("heisenberg", 4), nambu::ConfigError);
    CHECK_THROWS_AS(LieAlgebra::builtin("sl", 3), nambu::ConfigError);
}

TEST_CASE("known gl(2) brackets in the matrix-unit basis") {
    auto gl2 = LieAlgebra::builtin("gl", 2);
    std::size_t e11 = gl2->label_index("E11"), e12 = gl2->label_index("E12"),
                e21 = gl2->label_index("E21"), e22 = gl2->label_index("E22");
    // [E11, E12] = E12
    CHECK(gl2->f(e12, e11, e12) == 1);
    // [E12, E21] = E11 - E22
    CHECK(gl2->f(e11, e12, e21) == 1);
    CHECK(gl2->f(e22, e12, e21) == -1);
    // [E11, E22] = 0
    for (std::size_t a = 0; a < 4; ++a) CHECK(gl2->f(a, e11, e22) == 0);
}

TEST_CASE("sl(2) brackets: [h,e]=2e, [h,f]=-2f, [e,f]=h") {
    auto sl2 = LieAlgebra::builtin("sl", 2);
    std::size_t h = sl2->label_index("h"), e = sl2->label_index("e"),
                f = sl2->label_index("f");
    CHECK(sl2->f(e, h, e) == 2);
    CHECK(sl2->f(f, h, f) == -2);
    CHECK(sl2->f(h, e, f) == 1);
}

TEST_CASE("bracket is bilinear and antisymmetric on randomized vectors") {
    std::mt19937_64 rng(20260823);
    for (const char* name : {"sl", "gl"}) {
        auto alg = LieAlgebra::builtin(name, 2);
        std::size_t n = alg->dim();
        for (int trial = 0; trial < 40; ++trial) {
            auto x = random_vector(rng, n), y = random_vector(rng, n),
                 z = random_vector(rng, n);
            Rational s(3, 2);
            auto xy = alg->bracket(x, y);
            auto yx = alg->bracket(y, x);
            std::vector<Rational> xs(n), sum(n);
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = s * x[i];
                sum[i] = y[i] + z[i];
            }
            auto lhs = alg->bracket(xs, sum);
            auto xy2 = alg->bracket(x, y), xz = alg->bracket(x, z);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(xy[i] == -yx[i]);
                CHECK(lhs[i] == s * (xy2[i] + xz[i]));
            }
            auto xx = alg->bracket(x, x);
            for (std::size_t i = 0; i < n; ++i) CHECK(xx[i] == 0);
        }
    }
}

TEST_CASE("bracket rejects wrong vector lengths") {
    auto sl2 = LieAlgebra::builtin("sl", 2);
    std::vector<Rational> good(3), bad(2);
    CHECK_THROWS_AS(sl2->bracket(good, bad), nambu::ShapeError);
}

TEST_CASE("trace form of gl(2) pairs transposed matrix units") {
    auto gl2 = LieAlgebra::builtin("gl", 2);
    auto form = gl2->trace_form();
    std::size_t e11 = gl2->label_index("E11"), e12 = gl2->label_index("E12"),
                e21 = gl2->label_index("E21"), e22 = gl2->label_index("E22");
    CHECK(form.g.at({e12, e21}) == 1);  // Tr(E12 E21) = Tr(E11) = 1
    CHECK(form.g.at({e11, e11}) == 1);
    CHECK(form.g.at({e11, e22}) == 0);
    CHECK(form.g.at({e12, e12}) == 0);
    CHECK(form.nondegenerate);
    // symmetric
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            CHECK(form.g.at({a, b}) == form.g.at({b, a}));
}

TEST_CASE("trace form of gl(n) is invariant on all basis triples") {
    for (std::size_t n : {2, 3}) {
        auto gl = LieAlgebra::builtin("gl", n);
        auto g = gl->trace_form().g;
        std::size_t d = gl->dim();
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t z = 0; z < d; ++z) {
                    Rational res(0);
                    for (std::size_t l = 0; l < d; ++l)
                        res += gl->f(l, x, y) * g.at({l, z}) +
                               gl->f(l, x, z) * g.at({y, l});
                    CHECK(res == 0);
                }
    }
}

TEST_CASE("trace form requires a matrix realization") {
    CHECK_THROWS_AS(LieAlgebra::builtin("heisenberg", 3)->trace_form(),
                    nambu::UnsupportedError);
}

TEST_CASE("change_basis preserves the Jacobi verdict") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-3, 3);
    auto sl2 = LieAlgebra::builtin("sl", 2);
    int done = 0;
    while (done < 10) {
        Tensor p({3, 3});
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) p.at({i, j}) = num(rng);
        if (!nambu::invert_matrix(p)) continue;
        ++done;
        CHECK(sl2->change_basis(p)->check_jacobi().passed());
    }
    // rescaling h in the perturbed algebra keeps the failure
    Tensor id({3, 3});
    for (std::size_t i = 0; i < 3; ++i) id.at({i, i}) = 1;
    id.at({0, 0}) = Rational(1, 2);
    auto bad = LieAlgebra::builtin("sl", 2);
    Tensor f = bad->f();
    f.at({1, 0, 1}) = 3;
    f.at({1, 1, 0}) = -3;
    auto pert = std::make_shared<LieAlgebra>(bad->basis_labels(), f);
    CHECK_FALSE(pert->change_basis(id)->check_jacobi().passed());
}

TEST_CASE("change_basis rejects singular matrices") {
    auto sl2 = LieAlgebra::builtin("sl", 2);
    Tensor p({3, 3});  // zero matrix
    CHECK_THROWS_AS(sl2->change_basis(p), nambu::ConfigError);
}

TEST_CASE("invert_matrix returns the exact inverse or nullopt") {
    Tensor m({2, 2});
    m.at({0, 0}) = 2;
    m.at({0, 1}) = 1;
    m.at({1, 0}) = 1;
    m.at({1, 1}) = 1;
    auto inv = nambu::invert_matrix(m);
    REQUIRE(inv.has_value());
    CHECK(inv->at({0, 0}) == 1);
    CHECK(inv->at({0, 1}) == -1);
    CHECK(inv->at({1, 0}) == -1);
    CHECK(inv->at({1, 1}) == 2);
    Tensor sing({2, 2});
    sing.at({0, 0}) = 1;
    sing.at({1, 0}) = 1;
    CHECK_FALSE(nambu::invert_matrix(sing).has_value());
}

TEST_CASE("label_index rejects unknown labels") {
    CHECK_THROWS_AS(LieAlgebra::builtin("sl", 2)->label_index("q"),
                    nambu::ConfigError);
}
