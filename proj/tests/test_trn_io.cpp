#include <doctest.h>

#include <sstream>

#include "tourney/error.hpp"
#include "tourney/generators.hpp"
#include "tourney/trn_io.hpp"

using namespace tourney;

namespace {

Errc parse_code(const std::string& text) {
  std::istringstream in(text);
  try {
    read_trn(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_SUITE("trn_io") {
  TEST_CASE("writes the documented layout") {
    CHECK(to_trn_string(carousel(3)) == "3\n010\n001\n100\n");
    CHECK(to_trn_string(transitive(1)) == "1\n0\n");
  }

  TEST_CASE("reads what it writes, in both formats") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Tournament t = random_uniform(1 + seed * 7, seed);
      std::istringstream trn(to_trn_string(t));
      CHECK(read_trn(trn) == t);

      std::ostringstream arcs;
      write_arc_list(arcs, t);
      std::istringstream back(arcs.str());
      const Tournament u = read_arc_list(back);
      CHECK(u == t);
      CHECK(to_trn_string(u) == to_trn_string(t));
    }
  }

  TEST_CASE("accepts CRLF line endings") {
    std::istringstream in("3\r\n010\r\n001\r\n100\r\n");
    CHECK(read_trn(in) == carousel(3));
  }

  TEST_CASE("rejects invariant violations with the tournament taxonomy") {
    CHECK(parse_code("3\n110\n001\n100\n") == Errc::SelfLoop);
    CHECK(parse_code("3\n011\n001\n100\n") == Errc::ConflictingArc);
    CHECK(parse_code("3\n000\n001\n100\n") == Errc::MissingArc);
  }

  TEST_CASE("rejects malformed text") {
    CHECK(parse_code("") == Errc::ParseError);
    CHECK(parse_code("x\n") == Errc::ParseError);
    CHECK(parse_code("0\n") == Errc::ParseError);
    CHECK(parse_code("3\n010\n001\n") == Errc::ParseError);
    CHECK(parse_code("3\n010\n0010\n100\n") == Errc::ParseError);
    CHECK(parse_code("3\n010\n0a1\n100\n") == Errc::ParseError);
    CHECK(parse_code("3\n010\n001\n100\n111\n") == Errc::ParseError);
  }

  TEST_CASE("arc list without an order header infers it") {
    std::istringstream in("0 1\n1 2\n2 0\n");
    CHECK(read_arc_list(in) == carousel(3));
    std::istringstream missing("# n 4\n0 1\n1 2\n2 0\n");
    CHECK_THROWS_AS(read_arc_list(missing), Error);
    std::istringstream junk("0 1 2\n");
    CHECK_THROWS_AS(read_arc_list(junk), Error);
  }

  TEST_CASE("missing files surface as ParseError") {
    try {
      load_trn("/nonexistent/dir/x.trn");
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}
