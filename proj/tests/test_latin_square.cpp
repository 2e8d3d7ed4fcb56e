#include <doctest.h>

#include <set>

#include "qgprng/latin_square.hpp"

using namespace qgprng;

namespace {

const std::vector<std::vector<std::int64_t>> kTable1 = {
    {2, 1, 5, 3, 4}, {5, 4, 2, 1, 3}, {3, 5, 1, 4, 2}, {4, 2, 3, 5, 1}, {1, 3, 4, 2, 5},
};

LatinSquareError::Kind error_kind(const std::vector<std::vector<std::int64_t>>& grid) {
  try {
    LatinSquare::validate(grid);
  } catch (const LatinSquareError& e) {
    return e.kind();
  }
  FAIL("expected LatinSquareError");
  return LatinSquareError::Kind::NotSquare;
}

void check_laws(const LatinSquare& sq) {
  const auto n = static_cast<Symbol>(sq.order());
  for (Symbol u = 1; u <= n; ++u) {
    for (Symbol v = 1; v <= n; ++v) {
      // exactly one x with u·x = v and one y with y·u = v
      int right_solutions = 0;
      int left_solutions = 0;
      for (Symbol t = 1; t <= n; ++t) {
        right_solutions += sq.lookup(u, t) == v;
        left_solutions += sq.lookup(t, u) == v;
      }
      CHECK(right_solutions == 1);
      CHECK(left_solutions == 1);
      CHECK(sq.left_divide(u, sq.lookup(u, v)) == v);
      CHECK(sq.right_divide(sq.lookup(u, v), v) == u);
    }
  }
}

}  // namespace

TEST_CASE("Table 1 validates and supports lookup") {
  const auto sq = LatinSquare::validate(kTable1);
  CHECK(sq.order() == 5);
  CHECK(sq.lookup(2, 1) == 5);
  CHECK(sq.lookup(1, 5) == 4);
  CHECK(sq.lookup(2, 5) == 3);
  CHECK(sq.lookup(5, 2) == 3);
  CHECK(sq.rows() == kTable1);
}

TEST_CASE("Table 1 divisions") {
  const auto sq = LatinSquare::validate(kTable1);
  CHECK(sq.left_divide(2, 3) == 5);
  CHECK(sq.right_divide(3, 2) == 5);
  CHECK(sq.left_divide(1, 2) == 1);
  CHECK(sq.right_divide(1, 1) == 5);
  check_laws(sq);
}

TEST_CASE("order 1 is a valid square") {
  const auto sq = LatinSquare::validate({{1}});
  CHECK(sq.order() == 1);
  CHECK(sq.lookup(1, 1) == 1);
}

TEST_CASE("validate reports the first violation") {
  using K = LatinSquareError::Kind;
  CHECK(error_kind({}) == K::NotSquare);
  CHECK(error_kind({{1, 2}, {2}}) == K::NotSquare);
  CHECK(error_kind({{1, 2, 3}, {2, 3, 1}}) == K::NotSquare);
  CHECK(error_kind({{1, 3}, {2, 1}}) == K::SymbolOutOfRange);
  CHECK(error_kind({{0, 1}, {1, 2}}) == K::SymbolOutOfRange);
  CHECK(error_kind({{1, 2}, {1, 2}}) == K::DuplicateInColumn);

  try {
    LatinSquare::validate({{1, 1, 2, 3, 4}, {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}});
    FAIL("expected DuplicateInRow");
  } catch (const LatinSquareError& e) {
    CHECK(e.kind() == K::DuplicateInRow);
    CHECK(e.row() == 1);
  }

  // Row scan comes before the column scan: row 3 repeats and column 1 repeats;
  // the row error wins.
  try {
    LatinSquare::validate({{1, 2, 3}, {1, 3, 2}, {2, 2, 1}});
    FAIL("expected DuplicateInRow");
  } catch (const LatinSquareError& e) {
    CHECK(e.kind() == K::DuplicateInRow);
    CHECK(e.row() == 3);
  }

  try {
    LatinSquare::validate({{1, 2, 3}, {2, 3, 1}, {3, 2, 1}});
    FAIL("expected DuplicateInColumn");
  } catch (const LatinSquareError& e) {
    CHECK(e.kind() == K::DuplicateInColumn);
    CHECK(e.col() == 2);
  }
}

TEST_CASE("lookup rejects symbols outside 1..n") {
  const auto sq = LatinSquare::validate(kTable1);
  CHECK_THROWS_AS(sq.lookup(0, 1), LatinSquareError);
  CHECK_THROWS_AS(sq.lookup(1, 6), LatinSquareError);
  CHECK_THROWS_AS(sq.left_divide(6, 1), LatinSquareError);
  CHECK_THROWS_AS(sq.right_divide(1, 0), LatinSquareError);
}

TEST_CASE("random_latin_square") {
  SUBCASE("order 2 yields one of the two order-2 squares") {
    const std::set<std::vector<std::vector<std::int64_t>>> both = {{{1, 2}, {2, 1}}, {{2, 1}, {1, 2}}};
    std::set<std::vector<std::vector<std::int64_t>>> seen;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
      const auto rows = random_latin_square(2, seed).rows();
      CHECK(both.count(rows) == 1);
      seen.insert(rows);
    }
    CHECK(seen.size() == 2);
  }
  SUBCASE("deterministic in (n, seed)") {
    CHECK(random_latin_square(16, 99) == random_latin_square(16, 99));
    CHECK_FALSE(random_latin_square(16, 99) == random_latin_square(16, 100));
  }
  SUBCASE("output always validates") {
    for (const std::size_t n : {2, 3, 5, 16, 256}) {
      for (std::uint64_t seed : {1ull, 2ull, 0xDEADBEEFull}) {
        const auto sq = random_latin_square(n, seed);
        CHECK_NOTHROW(LatinSquare::validate(sq.rows()));
      }
    }
  }
  SUBCASE("order below 2 is rejected") {
    try {
      random_latin_square(1, 0);
      FAIL("expected OrderTooSmall");
    } catch (const LatinSquareError& e) {
      CHECK(e.kind() == LatinSquareError::Kind::OrderTooSmall);
    }
  }
}

TEST_CASE("SplitMix64 reference outputs") {
  // First outputs for seed 1234567 from the canonical SplitMix64 implementation.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ull);
  CHECK(rng.next() == 3203168211198807973ull);
  CHECK(rng.next() == 9817491932198370423ull);
}

TEST_CASE("quasigroup laws hold exhaustively for small orders") {
  for (const std::size_t n : {2, 3, 5, 8, 16}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) check_laws(random_latin_square(n, seed));
  }
}

TEST_CASE("text round trip") {
  const auto sq = LatinSquare::validate(kTable1);
  const std::string text = to_text(sq);
  CHECK(text == "5\n2 1 5 3 4\n5 4 2 1 3\n3 5 1 4 2\n4 2 3 5 1\n1 3 4 2 5\n");
  CHECK(parse_text(text) == sq);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = random_latin_square(2 + seed % 30, seed);
    CHECK(parse_text(to_text(r)) == r);
  }
}

TEST_CASE("parse_text accepts comments, blank lines and a missing trailing newline") {
  const auto sq = parse_text("# seed square\n3\n\n1 2 3\n# middle\n2 3 1\n3  1\t2");
  CHECK(sq.rows() == std::vector<std::vector<std::int64_t>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  CHECK(parse_text("2\r\n1 2\r\n2 1\r\n").order() == 2);
}

TEST_CASE("parse_text errors carry positions") {
  CHECK_THROWS_AS(parse_text(""), ParseError);
  CHECK_THROWS_AS(parse_text("# only a comment\n"), ParseError);

  try {
    parse_text("5\n2 1 5 3 4\n5 4 2 1 3\n3 5 1 4 2\n4 2 3 5 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
  try {
    parse_text("2\n1 x\n2 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_text("2\n1 2 3\n2 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_text("2\n1 2\n2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_text("2 2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("0\n"), ParseError);
  // well-formed text, invalid square
  CHECK_THROWS_AS(parse_text("2\n1 2\n1 2\n"), LatinSquareError);
}
