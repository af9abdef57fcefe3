#include "common.hpp"

#include "lns/bigfloat.hpp"
#include "lns/error.hpp"
#include "lns/numberfield.hpp"

#include <doctest.h>

#include <numeric>

using namespace lns;

namespace {

// Norm as the product of the four complex embeddings.
Real numeric_norm(const FieldElem& e, const FieldData& fd) {
    auto roots = quartic_roots(fd.defining_poly);
    RatVec pb = elem_to_power_basis(e, fd);
    Cplx prod = cplx(Real(1));
    for (const auto& r : roots) prod = prod * eval_rat_poly(pb, r);
    return prod.re;
}

Rat frac(long n, long d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

FieldElem elem(std::initializer_list<long> c) {
    FieldElem e;
    for (long v : c) e.coords.push_back(Int(v));
    return e;
}

}  // namespace

TEST_CASE("integral basis conversions") {
    const auto& K = test::config().quartic;
    auto one = elem_to_power_basis(elem({1, 0, 0, 0}), K);
    CHECK(one == RatVec{Rat(1), Rat(0), Rat(0), Rat(0)});
    auto w3 = elem_to_power_basis(elem({0, 0, 1, 0}), K);
    CHECK(w3 == RatVec{Rat(0), frac(4, 169), frac(1, 169), Rat(0)});
    auto w4 = elem_to_power_basis(elem({0, 0, 0, 1}), K);
    CHECK(w4 == RatVec{Rat(0), frac(92950, 142805), frac(173, 142805), frac(1, 142805)});

    for (const auto& [name, e] : K.primes) {
        CAPTURE(name);
        CHECK(power_basis_to_elem(elem_to_power_basis(e, K), K) == e);
    }
    CHECK_THROWS_AS(power_basis_to_elem(RatVec{Rat(0), Rat(1, 2), Rat(0), Rat(0)}, K), DataIntegrityError);
}

TEST_CASE("cubic field") {
    const auto& C = test::config().cubic;
    CHECK(elem_norm(C.units.at("eps"), C) == Rat(1));
    RatVec eps_pb = elem_to_power_basis(C.units.at("eps"), C);
    CHECK(eps_pb == RatVec{Rat(1), Rat(338), Rat(-52)});
    CHECK(elem_norm(field_theta(C), C) == Rat(275));
    CHECK(is_irreducible(C.defining_poly));
}

TEST_CASE("quartic units and norms") {
    const auto& K = test::config().quartic;
    PrecisionGuard guard(60);
    CHECK(verify_unit(K.units.at("eps1"), K));
    CHECK(verify_unit(K.units.at("eps2"), K));
    CHECK_FALSE(verify_unit(elem({2, 0, 0, 0}), K));
    CHECK(elem_norm(elem({2, 0, 0, 0}), K) == Rat(16));

    for (const auto& [name, e] : K.units) {
        CAPTURE(name);
        Rat n = elem_norm(e, K);
        CHECK(abs(n) == Rat(1));
        CHECK(abs(numeric_norm(e, K) - to_real(n)) < Real("1e-20"));
    }
    for (const auto& [name, e] : K.primes) {
        CAPTURE(name);
        Rat n = elem_norm(e, K);
        CHECK(abs(numeric_norm(e, K) - to_real(n)) / abs(to_real(n)) < Real("1e-20"));
    }
    Rat n132 = elem_norm(K.primes.at("pi132"), K);
    CHECK(abs(n132) == Rat(2197));
    CHECK(abs(elem_norm(K.primes.at("pi2"), K)) == Rat(2));
    CHECK(abs(elem_norm(K.primes.at("pi52"), K)) == Rat(5));
}

TEST_CASE("multiplication and inverses") {
    const auto& K = test::config().quartic;
    const auto& e2 = K.units.at("eps2");
    CHECK(elem_mul(e2, field_one(K), K) == e2);
    CHECK(elem_mul(e2, elem_inverse_unit(e2, K), K) == field_one(K));
    auto two = elem_mul(elem_pow_signed(e2, -1, K), elem_pow(K.primes.at("pi2"), 4, K), K);
    CHECK(two == field_int(K, Int(2)));
    CHECK(elem_pow_signed(e2, 3, K) == elem_pow(e2, 3, K));
    CHECK(elem_mul(elem_pow_signed(e2, 3, K), elem_pow_signed(e2, -3, K), K) == field_one(K));
}

TEST_CASE("factorization identities") {
    const auto& K = test::config().quartic;
    auto rep = verify_prime_factorization(K);
    CHECK(rep.all_hold());
    CHECK(rep.identities.size() == 4);
    for (const auto& pn : rep.prime_norms) {
        CAPTURE(pn.label);
        CHECK(pn.prime_power);
        CHECK(pn.residue_degree == (pn.label == "pi132" ? 3 : 1));
    }

    FieldData bad = K;
    bad.primes.at("pi2").coords[0] += 1;
    CHECK_THROWS_AS(verify_prime_factorization(bad), DataIntegrityError);
}

TEST_CASE("reduction modulo split primes") {
    const auto& K = test::config().quartic;
    CHECK(reduce_mod_split_prime(field_one(K), K, Int(31), Int(17)) == 1);
    CHECK(reduce_mod_split_prime(field_theta(K), K, Int(31), Int(17)) == 17);

    std::vector<long> orders;
    for (long r : {1, 17, 19, 29}) {
        CHECK(eval_poly_mod(K.defining_poly, Int(r), Int(31)) == 0);
        orders.push_back(mult_order_mod(reduce_mod_split_prime(K.units.at("eps1"), K, Int(31), Int(r)), Int(31)));
    }
    CHECK(orders == std::vector<long>{10, 3, 15, 6});

    // Over all four roots the orders combine to 30, 15, 15, 30.
    std::vector<long> lcms;
    for (const char* label : {"eps1", "eps2", "pi51", "pi111"}) {
        long o = 1;
        for (long r : {1, 17, 19, 29}) {
            o = std::lcm(o, mult_order_mod(reduce_mod_split_prime(K.element(label), K, Int(31), Int(r)), Int(31)));
        }
        lcms.push_back(o);
    }
    CHECK(lcms == std::vector<long>{30, 15, 15, 30});

    CHECK(mult_order_mod(Int(1), Int(31)) == 1);
    CHECK(mult_order_mod(Int(30), Int(31)) == 2);
    CHECK_THROWS_AS(mult_order_mod(Int(0), Int(31)), DomainError);
    CHECK_THROWS(reduce_mod_split_prime(field_one(K), K, Int(13), Int(0)));
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(test::config().quartic.defining_poly));
    // (t^2 + 1)(t^2 + 2)
    CHECK_FALSE(is_irreducible({Int(2), Int(0), Int(3), Int(0), Int(1)}));
    // t^3 - 8
    CHECK_FALSE(is_irreducible({Int(-8), Int(0), Int(0), Int(1)}));
    CHECK(is_irreducible({Int(-2), Int(0), Int(0), Int(1)}));
}
