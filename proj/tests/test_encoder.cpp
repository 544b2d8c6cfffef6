#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>

#include "oracles.hpp"
#include "semsig/encoder.hpp"
#include "semsig/error.hpp"

using namespace semsig;
using Catch::Approx;

namespace {

std::vector<int> ids(const std::vector<ConfigSymbol>& s) {
  std::vector<int> out;
  for (auto v : s) out.push_back(id(v));
  return out;
}

}  // namespace

TEST_CASE("sign_of", "[encoder]") {
  CHECK(sign_of(0.0, 0) == Sign::Zero);
  CHECK(sign_of(-3.2, 0) == Sign::Negative);
  CHECK(sign_of(1e-9, 1e-6) == Sign::Zero);
  CHECK(sign_of(-1e-6, 1e-6) == Sign::Zero);
  CHECK(sign_of(2e-6, 1e-6) == Sign::Positive);
}

TEST_CASE("p_products", "[encoder]") {
  const auto peak = p_products(0, 1, 0);
  CHECK(peak.left == -2.0);
  CHECK(peak.right == 2.0);
  const auto flat = p_products(0, 0, 0);
  CHECK(flat.left == 0.0);
  CHECK(flat.right == 0.0);
  const auto line = p_products(1, 2, 3);
  CHECK(line.left == 0.0);
  CHECK(line.right == 0.0);
}

TEST_CASE("symbol table matches the reference rows", "[encoder]") {
  for (const auto& [key, expected] : oracle::table_one()) {
    auto to_sign = [](char c) {
      return c == '+' ? Sign::Positive : (c == '-' ? Sign::Negative : Sign::Zero);
    };
    const SignTriple t{to_sign(key[0]), to_sign(key[1]), to_sign(key[2])};
    const auto s = symbol_of(t);
    REQUIRE(s);
    CHECK(id(*s) == expected);
    CHECK(triple_of(*s) == t);
  }
  int unrealizable = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (!symbol_of({Sign(a), Sign(b), Sign(c)})) ++unrealizable;
  CHECK(unrealizable == 14);
  CHECK(!symbol_of({Sign::Positive, Sign::Positive, Sign::Negative}));
  CHECK(!symbol_of({Sign::Negative, Sign::Negative, Sign::Positive}));
  CHECK(!symbol_of({Sign::Zero, Sign::Positive, Sign::Negative}));
}

TEST_CASE("classify_window", "[encoder]") {
  CHECK(classify_window(1, 0, 1) == ConfigSymbol::Trough);
  CHECK(classify_window(0, 1, 0) == ConfigSymbol::Peak);
  CHECK(classify_window(1, 2, 3) == ConfigSymbol::RisingLine);
  CHECK(classify_window(0, 0, 0) == ConfigSymbol::Flat);
  CHECK(id(classify_window(0, 0, 1)) == 10);
  CHECK(id(classify_window(0, 1, 1)) == 12);

  SECTION("tolerance can make a triple unrealizable") {
    // back = 0.6 survives the tolerance, dd = -0.3 and fwd = 0.3 do not: (+,0,0).
    try {
      classify_window(0.0, 0.6, 0.9, 0.5);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InconsistentTriple);
    }
    CHECK(!try_classify_window(0.0, 0.6, 0.9, 0.5));
    CHECK(try_classify_window(0.0, 0.6, 0.9, 0.0) == ConfigSymbol::RisingConcave);
  }
}

TEST_CASE("exhaustive integer windows realize exactly the 13 configurations",
          "[encoder][property]") {
  std::set<int> seen;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        const auto s = try_classify_window(a, b, c, 0.0);
        REQUIRE(s);
        CHECK(id(*s) == oracle::classify_int(a, b, c));
        seen.insert(id(*s));
      }
  CHECK(seen.size() == 13);
}

TEST_CASE("P-operator sign never drops across a window", "[encoder][property]") {
  // The sign pairs (left>0, right<0), (left=0, right<0), (left>0, right=0) never occur.
  oracle::SplitMix gen{2024};
  auto check_window = [](double a, double b, double c) {
    const auto p = p_products(a, b, c);
    const Sign l = sign_of(p.left), r = sign_of(p.right);
    CHECK(to_int(r) >= to_int(l));
  };
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) check_window(a, b, c);
  for (int i = 0; i < 20000; ++i) {
    check_window(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
  }
}

TEST_CASE("symbolize", "[encoder]") {
  CHECK(ids(symbolize(make_signal({0, 1, 0, 1, 0}, 1))) == std::vector<int>{6, 5, 6});
  CHECK(ids(symbolize(make_signal({0, 1, 2, 3}, 1))) == std::vector<int>{7, 7});
  try {
    symbolize(make_signal({5, 5}, 1));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooShort);
  }

  SECTION("inconsistent window reports the centre sample") {
    try {
      symbolize(make_signal({5, 5, 0.0, 0.6, 0.9, 3}, 1), 0.5);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InconsistentTriple);
      REQUIRE(e.index());
      CHECK(*e.index() == 3);
    }
  }

  SECTION("property: length and agreement with the window oracle") {
    oracle::SplitMix gen{7};
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 3 + gen.below(60);
      std::vector<double> x(n);
      // Mix of continuous values and small integers to force ties.
      for (auto& v : x) v = trial % 2 ? gen.uniform(-5, 5) : static_cast<double>(gen.below(4));
      const auto sym = symbolize(make_signal(x, 1));
      REQUIRE(sym.size() == n - 2);
      for (std::size_t k = 0; k < sym.size(); ++k) {
        CHECK(id(sym[k]) == oracle::classify_real(x[k], x[k + 1], x[k + 2]));
      }
    }
  }

  SECTION("continuous random data almost never produces ties") {
    oracle::SplitMix gen{99};
    std::vector<double> x(20000);
    for (auto& v : x) v = gen.unit();
    std::size_t rare = 0;
    for (auto s : symbolize(make_signal(x, 1))) rare += id(s) >= 7;
    CHECK(rare == 0);
  }
}

TEST_CASE("semantic_power", "[encoder]") {
  CHECK(semantic_power(make_signal({0, 1, 2, 3}, 1)) == std::vector<double>{0, 0});
  CHECK(semantic_power(make_signal({0, 1, 0}, 1)) == std::vector<double>{-2});

  // Finite-difference oracle on the squares: s'[n] = x[n]-x[n-1],
  // s''[n] = x[n+1]-2x[n]+x[n-1].
  const std::vector<double> x{0, 1, 4, 9, 16};
  std::vector<double> expected;
  for (std::size_t n = 1; n + 1 < x.size(); ++n) {
    expected.push_back((x[n + 1] - 2 * x[n] + x[n - 1]) * (x[n] - x[n - 1]));
  }
  CHECK(expected == std::vector<double>{2, 6, 10});
  CHECK(semantic_power(make_signal(x, 1)) == expected);

  CHECK_THROWS_AS(semantic_power(make_signal({1, 2}, 1)), Error);
}
