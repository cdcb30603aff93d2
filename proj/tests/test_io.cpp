#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "dessins/error.hpp"
#include "dessins/io.hpp"
#include "oracles.hpp"

using namespace dessins;

namespace {

ParseError parse_failure(const std::function<void()> &f) {
  try {
    f();
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

bool same_table(const FiniteGroup &a, const FiniteGroup &b) {
  if (a.order() != b.order())
    return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y))
        return false;
  return true;
}

} // namespace

TEST_CASE("dessin text format") {
  const Dessin d(Perm({1, 2, 0}), Perm(3));
  CHECK(write_dessin(d) == "dessin v1\nn 3\ns0 1 2 0\ns1 0 1 2\n");
  CHECK(parse_dessin(write_dessin(d)) == d);
  // blank lines, tabs and CRLF are tolerated
  CHECK(parse_dessin("\ndessin v1\r\n\tn 3\n\ns0  1 2 0\ns1 0 1 2") == d);
}

TEST_CASE("dessin round trip on random pairs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = oracle::random_dessin(1 + trial % 12, rng);
    const auto back = parse_dessin(write_dessin(d));
    REQUIRE(back == d);
    CHECK(write_dessin(back) == write_dessin(d));
  }
}

TEST_CASE("dessin diagnostics") {
  auto e = parse_failure([] { parse_dessin("dessin v1\nn 3\ns0 0 1 1\ns1 0 1 2\n"); });
  CHECK(e.line() == 3);
  CHECK(e.column() == 8);
  CHECK(std::string(e.what()).find("repeated image 1") != std::string::npos);
  CHECK(e.code() == Errc::Parse);

  e = parse_failure([] { parse_dessin("dessin v2\n"); });
  CHECK(e.line() == 1);
  CHECK(e.column() == 8);

  e = parse_failure([] { parse_dessin("dessin v1\nn 3\ns0 1 2\n"); });
  CHECK(e.line() == 3);

  e = parse_failure([] { parse_dessin("dessin v1\nn 2\ns0 0 x\ns1 0 1\n"); });
  CHECK(e.column() == 6);
  CHECK(std::string(e.what()).find("integer") != std::string::npos);

  e = parse_failure([] { parse_dessin("dessin v1\nn 2\ns0 0 5\ns1 0 1\n"); });
  CHECK(std::string(e.what()).find("out of range") != std::string::npos);

  // valid permutations, but not connected
  e = parse_failure([] { parse_dessin("dessin v1\nn 2\ns0 0 1\ns1 0 1\n"); });
  CHECK(e.line() == 4);

  e = parse_failure([] { parse_dessin("dessin v1\nn 1\ns0 0\ns1 0\nextra\n"); });
  CHECK(e.line() == 5);

  e = parse_failure([] { parse_dessin("dessin v1\nn 1\n"); });
  CHECK(std::string(e.what()).find("end of input") != std::string::npos);
}

TEST_CASE("group round trip") {
  for (const auto &g : {cyclic(1), cyclic(7), dihedral(10), symmetric(4),
                        elementary_abelian(3, 2), quaternion8()}) {
    const auto back = parse_group(write_group(g));
    CHECK(same_table(g, back));
    CHECK(back.label() == g.label());
    CHECK(write_group(back) == write_group(g));
  }
}

TEST_CASE("group diagnostics") {
  auto e = parse_failure([] { parse_group("group v1\norder 2\n0 1\n1 1\n"); });
  CHECK(e.code() == Errc::Parse);
  e = parse_failure([] { parse_group("group v1\norder 2\n0 1\n1\n"); });
  CHECK(e.line() == 4);
  e = parse_failure([] { parse_group("group v1\norder 0\n"); });
  CHECK(e.line() == 2);
}

TEST_CASE("gvec round trip and diagnostics") {
  GvecFile f;
  f.group_path = "q8.group";
  f.vector.gamma = 1;
  f.vector.handles = {{2, 4}};
  f.vector.branches = {1, 1};
  const auto back = parse_gvec(write_gvec(f));
  CHECK(back.group_path == f.group_path);
  CHECK(back.vector.gamma == 1);
  CHECK(back.vector.handles == f.vector.handles);
  CHECK(back.vector.branches == f.vector.branches);

  GvecFile empty;
  empty.group_path = "g";
  const auto e0 = parse_gvec(write_gvec(empty));
  CHECK(e0.vector.branches.empty());
  CHECK(e0.vector.handles.empty());

  auto e = parse_failure([] {
    parse_gvec("gvec v1\ngroup g\ngamma 2\nhandles 1 2 3\nbranches\n");
  });
  CHECK(e.line() == 4);
  CHECK(std::string(e.what()).find("expected 4 values") != std::string::npos);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "dessins_io_test";
  std::filesystem::create_directories(dir);
  const Dessin d(Perm({1, 2, 3, 0}), Perm({2, 3, 0, 1}));
  write_text_file(dir / "d.txt", write_dessin(d));
  CHECK(read_dessin_file(dir / "d.txt") == d);
  write_text_file(dir / "g.txt", write_group(quaternion8()));
  CHECK(same_table(read_group_file(dir / "g.txt"), quaternion8()));

  try {
    read_dessin_file(dir / "missing.txt");
    FAIL("expected Io");
  } catch (const Error &err) {
    CHECK(err.code() == Errc::Io);
  }
  write_text_file(dir / "bad.txt", "dessin v1\nn x\n");
  try {
    read_dessin_file(dir / "bad.txt");
    FAIL("expected a parse error");
  } catch (const ParseError &err) {
    CHECK(err.line() == 2);
    CHECK(std::string(err.what()).find("bad.txt") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports are deterministic") {
  GeneratingVector v;
  v.branches = {2, 4, 7};
  const auto c1 = realize(quaternion8(), v);
  const auto c2 = realize(quaternion8(), v);
  const auto r = certificate_report(c1);
  CHECK(r == certificate_report(c2));
  CHECK(r.find("genus 2\n") != std::string::npos);
  CHECK(r.find("aut_order 8\n") != std::string::npos);
  CHECK(r.find("verified true\n") != std::string::npos);
  // the trailing dessin parses back to the derived one
  const auto at = r.find("dessin v1");
  REQUIRE(at != std::string::npos);
  CHECK(parse_dessin(r.substr(at)) == c1.derived);

  const auto dr = dessin_report(Dessin::single_edge());
  CHECK(dr.find("genus 0\n") != std::string::npos);
  CHECK(dr.find("regular true\n") != std::string::npos);
}
