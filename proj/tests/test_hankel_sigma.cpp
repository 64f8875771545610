#include <doctest.h>

#include "adjx/hankel_sigma.hpp"
#include "adjx/oracle.hpp"
#include "support.hpp"

using namespace adjx;
using adjx::test::ints;
using adjx::test::mat;

namespace
{

// Ones on the subdiagonal, -f in the last column.
template <CommutativeRing R>
MatrixOf<R> companion(const R& ring, const Poly<element_t<R>>& f)
{
    const std::size_t n = f.size() - 1;
    auto c = zero_matrix(ring, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c(i + 1, i) = ring.one();
    }
    for (std::size_t i = 0; i < n; ++i) {
        c(i, n - 1) = ring.neg(f[i]);
    }
    return c;
}

// Random h whose H and H_A are both nonsingular.
template <CommutativeRing R>
Vec<R> random_regular_sequence(const R& ring, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        auto h = adjx::test::random_vec(ring, 2 * n, rng);
        if (oracle::rank_elimination(ring, oracle::hankel_matrix(ring, h, n)) == n
            && oracle::rank_elimination(ring, oracle::hankel_matrix(ring, h, n, 1)) == n) {
            return h;
        }
    }
}

} // namespace

TEST_SUITE("hankel_sigma")
{
    TEST_CASE("last column of H_A from g")
    {
        const RationalRing q;
        const auto gs = gstar_from_g(q, ints(q, {1, -3, 1}), ints(q, {-1, 1}));
        CHECK(poly_equal(q, gs, ints(q, {-2, 1})));

        // H = I for n = 2 comes from h = (1, 0, 1, h3); pick h3 = 0, so f = x^2 - 1.
        const auto h = ints(q, {1, 0, 1, 0});
        const auto pair = hankel_pair(q, h);
        CHECK(poly_equal(q, pair.g, ints(q, {0, 1})));
        const auto direct = oracle::inverse_elimination(q, oracle::hankel_matrix(q, h, 2, 1)).col(1);
        CHECK(poly_equal(q, pair.g_star, direct));

        CHECK_THROWS_AS(gstar_from_g(q, ints(q, {0, -3, 1}), ints(q, {-1, 1})), NonUnitF0);
    }

    TEST_CASE("anti-diagonal sums examples")
    {
        const RationalRing q;
        const auto f = ints(q, {1, -3, 1});
        const auto g = ints(q, {-1, 1});
        const auto sig = sigma_sums(q, f, g, gstar_from_g(q, f, g), 2);
        CHECK(adjx::test::vec_equal(q, sig.sig_H, ints(q, {2, -2, 1, 0})));
        CHECK(adjx::test::vec_equal(q, sig.sig_HA, ints(q, {5, -4, 1, 0})));

        const auto pair = hankel_pair(q, ints(q, {1, 1}));
        const auto s1 = sigma_sums(q, pair.f, pair.g, pair.g_star, 1);
        CHECK(q.equal(s1.sig_H[0], q.one()));
        CHECK(q.is_zero(s1.sig_H[1]));
    }

    TEST_CASE("structured inverses examples")
    {
        const RationalRing q;
        const auto pair = hankel_pair(q, ints(q, {1, 1, 2, 5}));
        CHECK(mat_equal(q, hankel_inverse_structured(q, pair, HankelWhich::H), mat(q, {{2, -1}, {-1, 1}})));
        CHECK(mat_equal(q, hankel_inverse_structured(q, pair, HankelWhich::HA), mat(q, {{5, -2}, {-2, 1}})));

        const auto id = hankel_pair(q, ints(q, {1, 0, 1, 0}));
        CHECK(mat_equal(q, hankel_inverse_structured(q, id, HankelWhich::H), identity_matrix(q, 2)));
    }

    TEST_CASE("structured inverses and sums match elimination")
    {
        const PrimeField f;
        std::mt19937_64 rng(17);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + t % 10;
            const auto h = random_regular_sequence(f, n, rng);
            const auto pair = hankel_pair(f, h);
            const auto H = oracle::hankel_matrix(f, h, n);
            const auto HA = oracle::hankel_matrix(f, h, n, 1);
            const auto hinv = hankel_inverse_structured(f, pair, HankelWhich::H);
            const auto hainv = hankel_inverse_structured(f, pair, HankelWhich::HA);
            CHECK(mat_equal(f, mat_mul(f, hinv, H), identity_matrix(f, n)));
            CHECK(mat_equal(f, mat_mul(f, hainv, HA), identity_matrix(f, n)));
            CHECK(mat_equal(f, hinv, oracle::inverse_elimination(f, H)));
            CHECK(mat_equal(f, hainv, oracle::inverse_elimination(f, HA)));

            const auto sig = sigma_sums(f, pair.f, pair.g, pair.g_star, n);
            CHECK(adjx::test::vec_equal(f, sig.sig_H, oracle::anti_diagonal_sums(f, oracle::inverse_elimination(f, H))));
            CHECK(adjx::test::vec_equal(f, sig.sig_HA,
                                        oracle::anti_diagonal_sums(f, oracle::inverse_elimination(f, HA))));
            CHECK(f.is_zero(sig.sig_H[2 * n - 1]));
            CHECK(f.is_zero(sig.sig_HA[2 * n - 1]));
        }
    }

    TEST_CASE("H_A times the inverse of H is the companion matrix of f")
    {
        const PrimeField f;
        std::mt19937_64 rng(19);
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto h = random_regular_sequence(f, n, rng);
            const auto pair = hankel_pair(f, h);
            const auto prod = mat_mul(f, oracle::hankel_matrix(f, h, n, 1), hankel_inverse_structured(f, pair, HankelWhich::H));
            const auto hinv_ha = mat_mul(f, hankel_inverse_structured(f, pair, HankelWhich::H), oracle::hankel_matrix(f, h, n, 1));
            CHECK(mat_equal(f, prod, transpose<PrimeField>(companion(f, pair.f))));
            CHECK(mat_equal(f, hinv_ha, companion(f, pair.f)));
        }
    }

    TEST_CASE("anti-diagonal sum of the last index is empty")
    {
        const PrimeField f;
        std::mt19937_64 rng(23);
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto sums = oracle::anti_diagonal_sums(f, random_matrix(f, n, n, rng));
            REQUIRE(sums.size() == 2 * n);
            CHECK(f.is_zero(sums[2 * n - 1]));
        }
    }
}
