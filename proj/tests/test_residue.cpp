#include <doctest.h>

#include <limits>

#include "cyclelift/residue.hpp"
#include "oracle.hpp"

using namespace cyclelift;

TEST_CASE("make_modulus factors by trial division") {
  CHECK(make_modulus(12).factorization() == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(make_modulus(9).factorization() == std::vector<PrimePower>{{3, 2}});
  CHECK(make_modulus(97).factorization() == std::vector<PrimePower>{{97, 1}});
  CHECK(make_modulus(2).is_prime_power());
  CHECK_FALSE(make_modulus(12).is_prime_power());
  CHECK_THROWS_AS(make_modulus(1), DomainError);
  CHECK_THROWS_AS(make_modulus(0), DomainError);
  CHECK_THROWS_AS(make_modulus(std::uint64_t{1} << 63), OverflowError);
}

TEST_CASE("factorization multiplies back to m with increasing primes") {
  for (std::uint64_t m = 2; m <= 3000; ++m) {
    const Modulus mod = make_modulus(m);
    std::uint64_t product = 1, last = 1;
    for (const PrimePower& pp : mod.factorization()) {
      CHECK(pp.prime > last);
      CHECK(pp.exponent >= 1);
      CHECK(is_prime(pp.prime));
      last = pp.prime;
      for (unsigned i = 0; i < pp.exponent; ++i) product *= pp.prime;
    }
    CHECK(product == m);
  }
}

TEST_CASE("prime power moduli") {
  PrimePowerModulus pp(5, 3);
  CHECK(pp.value() == 125);
  CHECK(pp.next().value() == 625);
  CHECK_THROWS_AS(PrimePowerModulus(6, 2), DomainError);
  CHECK_THROWS_AS(PrimePowerModulus(5, 0), DomainError);
  CHECK_THROWS_AS(PrimePowerModulus(2, 63), OverflowError);
  CHECK(PrimePowerModulus(2, 62).value() == std::uint64_t{1} << 62);
}

TEST_CASE("reduce yields the representative in [0, m)") {
  CHECK(reduce(-2, 5).value == 3);
  CHECK(reduce(10, 9).value == 1);
  CHECK(reduce(0, 7).value == 0);
  CHECK(reduce(-10, 5).value == 0);
  CHECK(reduce(std::numeric_limits<std::int64_t>::min(), 7).value ==
        static_cast<std::uint64_t>((std::numeric_limits<std::int64_t>::min() % 7) + 7) % 7);
  CHECK(reduce(-2, make_modulus(5)) == Residue{3, 5});
}

TEST_CASE("reduce is a ring homomorphism for m <= 100") {
  for (std::uint64_t m = 2; m <= 100; ++m) {
    for (std::int64_t a = -60; a <= 60; a += 7) {
      for (std::int64_t b = -55; b <= 55; b += 5) {
        const std::uint64_t ra = reduce(a, m).value, rb = reduce(b, m).value;
        REQUIRE(reduce(a + b, m).value == add_mod(ra, rb, m));
        REQUIRE(reduce(a * b, m).value == mul_mod(ra, rb, m));
        REQUIRE(reduce(a - b, m).value == sub_mod(ra, rb, m));
      }
    }
  }
}

TEST_CASE("mult_order") {
  CHECK(mult_order(1, 7) == 1);
  CHECK(mult_order(4, 7) == oracle::naive_order(4, 7));
  CHECK(mult_order(4, 7) == 3);
  CHECK(mult_order(2, 5) == oracle::naive_order(2, 5));
  CHECK(mult_order(2, 5) == 4);
  CHECK(mult_order(1, 2) == 1);
  CHECK(mult_order(Residue{3, 7}) == 6);
  CHECK_THROWS_AS(mult_order(0, 7), DomainError);
  CHECK_THROWS_AS(mult_order(14, 7), DomainError);
  CHECK_THROWS_AS(mult_order(2, 9), DomainError);
}

TEST_CASE("mult_order is minimal and divides p - 1 for all p <= 100") {
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t u = 1; u < p; ++u) {
      const std::uint64_t s = mult_order(u, p);
      REQUIRE((p - 1) % s == 0);
      REQUIRE(pow_mod(u, s, p) == 1);
      REQUIRE(s == oracle::naive_order(u, p));
      CHECK((s == 1) == (u == 1));
    }
  }
}

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    REQUIRE(is_prime(n) == trial);
  }
  CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ull));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("mul_mod is exact near the bound") {
  const std::uint64_t m = kMaxModulus;
  CHECK(mul_mod(m - 1, m - 1, m) == 1);
  CHECK(pow_mod(3, 0, 1) == 0);
}

TEST_CASE("extended_gcd") {
  for (std::int64_t a = 1; a < 60; ++a) {
    for (std::int64_t b = 1; b < 60; ++b) {
      const Bezout bz = extended_gcd(a, b);
      REQUIRE(bz.x * a + bz.y * b == bz.gcd);
      REQUIRE(a % bz.gcd == 0);
      REQUIRE(b % bz.gcd == 0);
    }
  }
}
