#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "decwit/errors.hpp"
#include "decwit/lietype.hpp"

using namespace decwit;
using namespace decwit::lietype;
using u64 = std::uint64_t;

namespace {

const std::vector<std::string> kAllTokens = {
    "A",  "B",  "C",   "D",   "E6",  "E7",  "E8",  "F4",
    "G2", "2A", "2D",  "3D4", "2E6", "2B2", "2G2", "2F4"};

// Field sizes valid for a record's series (very twisted series accept only
// odd powers >= 3 of their characteristic).
std::vector<u64> test_fields(Series series) {
  if (series == Series::Suzuki || series == Series::LargeRee) return {8, 32};
  if (series == Series::Ree) return {27};
  // 11 and 16 give q - 1 a prime factor above 3 (for the split case).
  return {2, 3, 4, 5, 9, 11, 16};
}

u64 factorial(u64 n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("series tokens round-trip") {
  for (const auto& token : kAllTokens) {
    auto series = series_from_token(token);
    REQUIRE(series.has_value());
    CHECK(to_string(*series) == token);
  }
  CHECK_FALSE(series_from_token("Z").has_value());
  CHECK_FALSE(series_from_token("2B").has_value());
  CHECK_FALSE(series_from_token("a").has_value());
}

TEST_CASE("order table covers the expected records") {
  CHECK(order_table().size() == 49);
  // Variable-rank coverage.
  for (unsigned r = 1; r <= 8; ++r) CHECK(order_record(Series::A, r).rank == r);
  for (unsigned r = 2; r <= 8; ++r) {
    CHECK(order_record(Series::B, r).num_positive_roots == r * r);
    CHECK(order_record(Series::C, r).num_positive_roots == r * r);
    CHECK(order_record(Series::TwistedA, r).num_positive_roots ==
          r * (r + 1) / 2);
  }
  for (unsigned r = 4; r <= 8; ++r) {
    CHECK(order_record(Series::D, r).num_positive_roots == r * (r - 1));
    CHECK(order_record(Series::TwistedD, r).num_positive_roots ==
          r * (r - 1));
  }
  CHECK(order_record(Series::E8, 8).num_positive_roots == 120);
  CHECK_THROWS_AS(order_record(Series::A, 9), std::invalid_argument);
  CHECK_THROWS_AS(order_record(Series::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(order_record(Series::B, 1), std::invalid_argument);
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(make_spec(Series::A, 1, 4));
  CHECK_NOTHROW(make_spec(Series::Suzuki, 2, 8));
  CHECK_NOTHROW(make_spec(Series::Suzuki, 2, 32));
  CHECK_NOTHROW(make_spec(Series::Ree, 2, 27));
  CHECK_NOTHROW(make_spec(Series::LargeRee, 4, 8));
  CHECK_NOTHROW(make_spec(Series::D, 4, 2));

  // Bad ranks.
  CHECK_THROWS_AS(make_spec(Series::E6, 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::Suzuki, 1, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::D, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::A, 9, 2), std::invalid_argument);
  // Bad field sizes.
  CHECK_THROWS_AS(make_spec(Series::A, 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::A, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::Suzuki, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::Suzuki, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::Suzuki, 2, 27), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::Ree, 2, 9), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::Ree, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Series::LargeRee, 4, 16), std::invalid_argument);
}

TEST_CASE("display names") {
  CHECK(display_name(make_spec(Series::A, 2, 7)) == "A2(7)");
  CHECK(display_name(make_spec(Series::TwistedA, 3, 4)) == "2A3(4)");
  CHECK(display_name(make_spec(Series::TrialityD4, 4, 2)) == "3D4(2)");
  CHECK(display_name(make_spec(Series::Suzuki, 2, 8)) == "2B2(8)");
  CHECK(display_name(make_spec(Series::E8, 8, 5)) == "E8(5)");
}

TEST_CASE("group orders match published values") {
  // The eight standard reference orders.
  CHECK(group_order(make_spec(Series::A, 1, 4)).decimal() == "60");
  CHECK(group_order(make_spec(Series::A, 1, 5)).decimal() == "120");
  CHECK(group_order(make_spec(Series::A, 2, 2)).decimal() == "168");
  CHECK(group_order(make_spec(Series::TwistedA, 2, 2)).decimal() == "216");
  CHECK(group_order(make_spec(Series::C, 2, 3)).decimal() == "51840");
  CHECK(group_order(make_spec(Series::G2, 2, 2)).decimal() == "12096");
  CHECK(group_order(make_spec(Series::Suzuki, 2, 8)).decimal() == "29120");
  CHECK(group_order(make_spec(Series::TrialityD4, 4, 2)).decimal() ==
        "211341312");
  // Further published cross-checks, including the big exceptional members.
  CHECK(group_order(make_spec(Series::D, 4, 2)).decimal() == "174182400");
  CHECK(group_order(make_spec(Series::TwistedD, 4, 2)).decimal() ==
        "197406720");
  CHECK(group_order(make_spec(Series::TwistedA, 3, 3)).decimal() ==
        "13063680");
  CHECK(group_order(make_spec(Series::C, 3, 3)).decimal() == "9170703360");
  CHECK(group_order(make_spec(Series::Ree, 2, 27)).decimal() ==
        "10073444472");
  CHECK(group_order(make_spec(Series::F4, 4, 2)).decimal() ==
        "3311126603366400");
  CHECK(group_order(make_spec(Series::E6, 6, 2)).decimal() ==
        "214841575522005575270400");
  CHECK(group_order(make_spec(Series::LargeRee, 4, 8)).decimal() ==
        "264905352699586176614400");
  // The simply connected form of 2E6(2) is three times the simple group.
  CHECK(group_order(make_spec(Series::TwistedE6, 6, 2)).decimal() ==
        "229597439051324561817600");

  CHECK(group_order(make_spec(Series::A, 1, 4)).factored_string() ==
        "2^2·3·5");
  CHECK(group_order(make_spec(Series::TrialityD4, 4, 2)).factored_string() ==
        "2^12·3^4·7^2·13");
}

TEST_CASE("centre orders and simple quotients") {
  CHECK(centre_order(make_spec(Series::A, 1, 5)) == 2);
  CHECK(centre_order(make_spec(Series::A, 1, 4)) == 1);
  CHECK(centre_order(make_spec(Series::A, 2, 4)) == 3);
  CHECK(centre_order(make_spec(Series::A, 3, 7)) == 2);  // gcd(4, 6)
  CHECK(centre_order(make_spec(Series::TwistedA, 2, 2)) == 3);
  CHECK(centre_order(make_spec(Series::TwistedA, 3, 3)) == 4);
  CHECK(centre_order(make_spec(Series::C, 3, 3)) == 2);
  CHECK(centre_order(make_spec(Series::D, 4, 3)) == 4);   // gcd(4, 80)
  CHECK(centre_order(make_spec(Series::D, 5, 3)) == 2);   // gcd(4, 242)
  CHECK(centre_order(make_spec(Series::TwistedD, 4, 3)) == 2);  // gcd(4, 82)
  CHECK(centre_order(make_spec(Series::E7, 7, 3)) == 2);
  CHECK(centre_order(make_spec(Series::TwistedE6, 6, 2)) == 3);
  CHECK(centre_order(make_spec(Series::G2, 2, 5)) == 1);
  CHECK(centre_order(make_spec(Series::Suzuki, 2, 8)) == 1);

  // Published simple-group orders obtained as central quotients.
  CHECK(simple_group_order(make_spec(Series::A, 1, 5)).decimal() == "60");
  CHECK(simple_group_order(make_spec(Series::TwistedA, 3, 3)).decimal() ==
        "3265920");
  // The classic equal-order pair: PSp_6(3) and the rank-3 orthogonal group
  // over F_3 share the order 4585351680 without being isomorphic.
  CHECK(simple_group_order(make_spec(Series::C, 3, 3)).decimal() ==
        "4585351680");
  CHECK(simple_group_order(make_spec(Series::B, 3, 3)).decimal() ==
        "4585351680");
  CHECK(simple_group_order(make_spec(Series::TwistedE6, 6, 2)).decimal() ==
        "76532479683774853939200");
}

TEST_CASE("borel orders: worked examples") {
  CHECK(borel_order(make_spec(Series::A, 2, 7)).decimal() == "12348");
  CHECK(borel_order(make_spec(Series::TrialityD4, 4, 2)).decimal() ==
        "28672");
  CHECK(borel_order(make_spec(Series::Suzuki, 2, 8)).decimal() == "448");
  CHECK(borel_order(make_spec(Series::A, 1, 5)).decimal() == "20");
  CHECK(borel_order(make_spec(Series::TwistedA, 2, 4)).decimal() ==
        "960");  // 4^3 * 3 * 5
}

TEST_CASE("table consistency: polynomial degree equals group dimension") {
  for (const auto& record : order_table()) {
    long long degree = record.num_positive_roots;
    for (const auto& factor : record.order_factors) {
      const long long d =
          static_cast<long long>(factor.degree) * factor.multiplicity;
      degree += factor.divides ? -d : d;
    }
    const long long r = record.rank;
    long long expected = 0;
    switch (record.series) {
      case Series::A:
      case Series::TwistedA:
        expected = r * (r + 2);
        break;
      case Series::B:
      case Series::C:
        expected = r * (2 * r + 1);
        break;
      case Series::D:
      case Series::TwistedD:
        expected = r * (2 * r - 1);
        break;
      case Series::TrialityD4:
        expected = 28;
        break;
      case Series::G2:
        expected = 14;
        break;
      case Series::F4:
        expected = 52;
        break;
      case Series::E6:
      case Series::TwistedE6:
        expected = 78;
        break;
      case Series::E7:
        expected = 133;
        break;
      case Series::E8:
        expected = 248;
        break;
      // Very twisted: the field parameter is the full field size, so the
      // polynomial degree is half the dimension.
      case Series::Suzuki:
        expected = 5;
        break;
      case Series::Ree:
        expected = 7;
        break;
      case Series::LargeRee:
        expected = 26;
        break;
    }
    INFO("series ", to_string(record.series), " rank ", record.rank);
    CHECK(degree == expected);
  }
}

TEST_CASE("table consistency: invariant degrees multiply to Weyl order") {
  for (const auto& record : order_table()) {
    if (record.series == Series::TrialityD4 ||
        is_very_twisted(record.series)) {
      continue;  // degree lists are not plain invariant degrees there
    }
    u64 product = 1;
    for (const auto& factor : record.order_factors) {
      for (unsigned i = 0; i < factor.multiplicity; ++i) {
        product *= factor.degree;
      }
    }
    const u64 r = record.rank;
    u64 weyl = 0;
    switch (record.series) {
      case Series::A:
      case Series::TwistedA:
        weyl = factorial(r + 1);
        break;
      case Series::B:
      case Series::C:
        weyl = (u64{1} << r) * factorial(r);
        break;
      case Series::D:
      case Series::TwistedD:
        weyl = (u64{1} << (r - 1)) * factorial(r);
        break;
      case Series::G2:
        weyl = 12;
        break;
      case Series::F4:
        weyl = 1152;
        break;
      case Series::E6:
      case Series::TwistedE6:
        weyl = 51840;
        break;
      case Series::E7:
        weyl = 2903040;
        break;
      case Series::E8:
        weyl = 696729600;
        break;
      default:
        break;
    }
    INFO("series ", to_string(record.series), " rank ", record.rank);
    CHECK(product == weyl);
  }
}

TEST_CASE("borel order divides group order with p'-quotient") {
  for (const auto& record : order_table()) {
    for (u64 q : test_fields(record.series)) {
      const auto spec = make_spec(record.series, record.rank, q);
      const auto order = group_order(spec);
      const auto borel = borel_order(spec);
      INFO(display_name(spec));
      REQUIRE(borel.divides(order));
      auto quotient = order;
      quotient.divide_exact(borel);
      CHECK(quotient.exponent_of(defining_characteristic(spec)) == 0);
      // The centre divides the group order exactly.
      auto simple = simple_group_order(spec);
      simple *= arith::factor_natural(centre_order(spec));
      CHECK(simple == order);
    }
  }
}

TEST_CASE("cross-characteristic classifier: worked examples") {
  // p = 5 is coprime to |B| = 7^4 * 6^2 but divides q^4 - 1 = 2400.
  auto big = classify_cross_char(make_spec(Series::B, 2, 7), 5);
  CHECK(big.tag == CrossCharTag::BigPrimes);
  CHECK_FALSE(big.witness_degree.has_value());

  // Rank-2 unitary with p | q + 1: cuspidal unipotent witness q(q - 1).
  auto cuspidal = classify_cross_char(make_spec(Series::TwistedA, 2, 4), 5);
  CHECK(cuspidal.tag == CrossCharTag::PGU3Cuspidal);
  REQUIRE(cuspidal.witness_degree.has_value());
  CHECK(cuspidal.witness_degree->value_u64() == 12);

  // Suzuki group: p | Q - 1 stays in the Borel; p | Q^2 + 1 does not.
  CHECK(classify_cross_char(make_spec(Series::Suzuki, 2, 8), 7).tag ==
        CrossCharTag::SuzukiReeSteinberg);
  CHECK(classify_cross_char(make_spec(Series::Suzuki, 2, 8), 13).tag ==
        CrossCharTag::BigPrimes);

  CHECK(classify_cross_char(make_spec(Series::A, 1, 11), 5).tag ==
        CrossCharTag::SteinbergSplit);
  CHECK(classify_cross_char(make_spec(Series::TwistedA, 3, 4), 5).tag ==
        CrossCharTag::TwistedSteinberg);
  CHECK(classify_cross_char(make_spec(Series::TrialityD4, 4, 2), 7).tag ==
        CrossCharTag::TwistedSteinberg);
  CHECK(classify_cross_char(make_spec(Series::E8, 8, 2), 31).tag ==
        CrossCharTag::BigPrimes);

  // Precondition violations.
  CHECK_THROWS_AS(classify_cross_char(make_spec(Series::A, 1, 5), 5),
                  std::invalid_argument);  // defining characteristic
  CHECK_THROWS_AS(classify_cross_char(make_spec(Series::A, 1, 4), 7),
                  std::invalid_argument);  // 7 does not divide 60
  CHECK_THROWS_AS(classify_cross_char(make_spec(Series::A, 1, 4), 3),
                  std::invalid_argument);  // p <= 3
  CHECK_THROWS_AS(classify_cross_char(make_spec(Series::A, 2, 4), 9),
                  std::invalid_argument);  // composite p
}

TEST_CASE("cross-characteristic classifier: exhaustive mini-sweep") {
  const std::vector<u64> primes = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                   83, 89, 97};
  std::map<CrossCharTag, int> seen;
  for (const auto& record : order_table()) {
    for (u64 q : test_fields(record.series)) {
      const auto spec = make_spec(record.series, record.rank, q);
      const auto order = group_order(spec);
      const auto borel = borel_order(spec);
      for (u64 p : primes) {
        if (p == defining_characteristic(spec)) continue;
        if (!order.divisible_by_prime(p)) continue;
        INFO(display_name(spec), " p=", p);
        CrossCharCase result = classify_cross_char(spec, p);  // never throws
        ++seen[result.tag];
        switch (result.tag) {
          case CrossCharTag::BigPrimes:
            CHECK_FALSE(borel.divisible_by_prime(p));
            break;
          case CrossCharTag::SuzukiReeSteinberg:
            CHECK(is_very_twisted(spec.series));
            CHECK((q - 1) % p == 0);
            break;
          case CrossCharTag::SteinbergSplit:
            CHECK((q - 1) % p == 0);
            break;
          case CrossCharTag::PGU3Cuspidal:
            CHECK(spec.series == Series::TwistedA);
            CHECK(spec.rank == 2);
            CHECK((q + 1) % p == 0);
            break;
          case CrossCharTag::TwistedSteinberg:
            if (spec.series == Series::TrialityD4) {
              CHECK((q * q + q + 1) % p == 0);
            } else {
              CHECK((q + 1) % p == 0);
            }
            break;
        }
      }
    }
  }
  // Every case arises somewhere in the sweep.
  CHECK(seen.size() == 5);
}
