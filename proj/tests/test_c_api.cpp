#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dessins/dessins.h"

namespace {

std::string take(char *s) {
  std::string out = s ? s : "";
  dsn_string_free(s);
  return out;
}

} // namespace

TEST_CASE("groups") {
  dsn_group *g = nullptr;
  REQUIRE(dsn_group_builtin("quaternion", &g) == DSN_OK);
  CHECK(dsn_group_order(g) == 8);
  int ord = 0;
  CHECK(dsn_group_element_order(g, 2, &ord) == DSN_OK);
  CHECK(ord == 4);
  CHECK(dsn_group_element_order(g, 8, &ord) == DSN_ERR_INVALID_ARGUMENT);

  char *text = nullptr;
  REQUIRE(dsn_group_to_string(g, &text) == DSN_OK);
  const std::string written = take(text);
  dsn_group *back = nullptr;
  REQUIRE(dsn_group_parse(written.c_str(), &back) == DSN_OK);
  CHECK(dsn_group_order(back) == 8);
  dsn_group_free(back);
  dsn_group_free(g);

  dsn_group *bad = nullptr;
  CHECK(dsn_group_builtin("tetrahedral:12", &bad) == DSN_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(dsn_last_error()).size() > 0);
  CHECK(dsn_group_parse("group v1\norder 2\n0 1\n1 1\n", &bad) == DSN_ERR_PARSE);
  CHECK(std::string(dsn_last_error()).find("line") != std::string::npos);
  dsn_group_free(nullptr);
}

TEST_CASE("dessins") {
  const int s0[] = {1, 2, 3, 0}, s1[] = {2, 3, 0, 1};
  dsn_dessin *d = nullptr;
  REQUIRE(dsn_dessin_new(4, s0, s1, &d) == DSN_OK);
  CHECK(dsn_dessin_n(d) == 4);
  int v = -1;
  CHECK(dsn_dessin_genus(d, &v) == DSN_OK);
  CHECK(v == 1);
  CHECK(dsn_dessin_aut_order(d, &v) == DSN_OK);
  CHECK(v == 4);
  CHECK(dsn_dessin_is_regular(d, &v) == DSN_OK);
  CHECK(v == 1);
  CHECK(dsn_dessin_is_uniform(d, &v) == DSN_OK);
  CHECK(v == 1);

  int a[4], b[4];
  CHECK(dsn_dessin_images(d, a, b) == DSN_OK);
  CHECK(std::vector<int>(a, a + 4) == std::vector<int>(s0, s0 + 4));
  CHECK(std::vector<int>(b, b + 4) == std::vector<int>(s1, s1 + 4));

  char *text = nullptr;
  REQUIRE(dsn_dessin_to_string(d, &text) == DSN_OK);
  CHECK(take(text) == "dessin v1\nn 4\ns0 1 2 3 0\ns1 2 3 0 1\n");
  REQUIRE(dsn_dessin_report(d, &text) == DSN_OK);
  CHECK(take(text).find("aut_order 4\n") != std::string::npos);
  REQUIRE(dsn_dessin_to_dot(d, &text) == DSN_OK);
  CHECK(take(text).find("graph") != std::string::npos);

  dsn_dessin *eta = nullptr;
  REQUIRE(dsn_compose_eta(d, &eta) == DSN_OK);
  CHECK(dsn_dessin_n(eta) == 12);
  CHECK(dsn_dessin_is_uniform(eta, &v) == DSN_OK);
  CHECK(v == 0);
  CHECK(dsn_dessin_is_isomorphic(d, eta, &v) == DSN_OK);
  CHECK(v == 0);
  dsn_dessin_free(eta);

  const auto path =
      (std::filesystem::temp_directory_path() / "dsn_c_api_test.dessin").string();
  REQUIRE(dsn_dessin_write(d, path.c_str()) == DSN_OK);
  dsn_dessin *read = nullptr;
  REQUIRE(dsn_dessin_read(path.c_str(), &read) == DSN_OK);
  CHECK(dsn_dessin_is_isomorphic(d, read, &v) == DSN_OK);
  CHECK(v == 1);
  dsn_dessin_free(read);
  std::remove(path.c_str());
  dsn_dessin_free(d);

  const int bad0[] = {0, 0}, id[] = {0, 1};
  CHECK(dsn_dessin_new(2, bad0, id, &d) == DSN_ERR_INVALID_ARGUMENT);
  CHECK(dsn_dessin_new(2, id, id, &d) == DSN_ERR_INVALID_ARGUMENT);
  CHECK(dsn_dessin_parse("dessin v1\nn 3\ns0 0 1 1\ns1 0 1 2\n", &d) == DSN_ERR_PARSE);
  CHECK(std::string(dsn_last_error()).find("repeated image 1") !=
        std::string::npos);
  CHECK(dsn_dessin_read("/nonexistent/file", &d) == DSN_ERR_IO);
  CHECK(dsn_dessin_new(2, nullptr, id, &d) == DSN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lemma1") {
  dsn_dessin *d = nullptr;
  REQUIRE(dsn_lemma1(2, 2, "bouquet", &d) == DSN_OK);
  CHECK(dsn_dessin_n(d) == 11);
  dsn_dessin_free(d);
  REQUIRE(dsn_lemma1(1, 3, "triangulation", &d) == DSN_OK);
  int g = -1;
  CHECK(dsn_dessin_genus(d, &g) == DSN_OK);
  CHECK(g == 1);
  dsn_dessin_free(d);
  CHECK(dsn_lemma1(1, 0, "spiral", &d) == DSN_ERR_INVALID_ARGUMENT);
  CHECK(dsn_lemma1(-1, 0, nullptr, &d) == DSN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("realisation") {
  dsn_group *q = nullptr;
  REQUIRE(dsn_group_builtin("quaternion", &q) == DSN_OK);
  const int branches[] = {2, 4, 7};
  dsn_certificate *c = nullptr;
  REQUIRE(dsn_realize(q, 0, nullptr, 3, branches, &c) == DSN_OK);
  dsn_certificate_info info{};
  REQUIRE(dsn_certificate_info_get(c, &info) == DSN_OK);
  CHECK(info.group_order == 8);
  CHECK(info.base_n == 5);
  CHECK(info.derived_n == 40);
  CHECK(info.genus == 2);
  CHECK(info.expected_genus == 2);
  CHECK(info.aut_order == 8);
  CHECK(info.iso_witness_found == 1);
  CHECK(info.verified == 1);
  CHECK(info.base_prime == 1);
  CHECK(info.base_uniform == 0);
  char *text = nullptr;
  REQUIRE(dsn_certificate_report(c, &text) == DSN_OK);
  CHECK(take(text).find("verified true") != std::string::npos);
  dsn_dessin *der = nullptr;
  REQUIRE(dsn_certificate_derived(c, &der) == DSN_OK);
  CHECK(dsn_dessin_n(der) == 40);
  dsn_dessin_free(der);
  dsn_certificate_free(c);

  const int broken[] = {2, 2, 2};
  CHECK(dsn_realize(q, 0, nullptr, 3, broken, &c) == DSN_ERR_VECTOR_INVALID);
  CHECK(std::string(dsn_last_error()).find("product relation") !=
        std::string::npos);

  int mu = 0;
  REQUIRE(dsn_strong_symmetric_genus(q, 20, &mu, &text) == DSN_OK);
  CHECK(mu == 2);
  CHECK(take(text).find("signature (0;4,4,4)") != std::string::npos);
  REQUIRE(dsn_realize_minimal(q, 20, &c) == DSN_OK);
  REQUIRE(dsn_certificate_info_get(c, &info) == DSN_OK);
  CHECK(info.genus == 2);
  dsn_certificate_free(c);
  dsn_group_free(q);

  dsn_group *e = nullptr;
  REQUIRE(dsn_group_builtin("elementary_abelian:2:3", &e) == DSN_OK);
  const int gens[] = {1, 2, 4};
  REQUIRE(dsn_realize_unbranched(e, gens, 3, &c) == DSN_OK);
  REQUIRE(dsn_certificate_info_get(c, &info) == DSN_OK);
  CHECK(info.genus == 17);
  CHECK(info.aut_order == 8);
  CHECK(info.derived_regular == 0);
  dsn_certificate_free(c);
  CHECK(dsn_strong_symmetric_genus(e, 2, &mu, &text) == DSN_ERR_CAP_EXCEEDED);
  const int two[] = {1, 2};
  CHECK(dsn_realize_unbranched(e, two, 2, &c) == DSN_ERR_VECTOR_INVALID);
  dsn_group_free(e);
}

TEST_CASE("realize from a gvec file") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "dsn_c_api_gvec";
  fs::create_directories(dir);
  dsn_group *q = nullptr;
  REQUIRE(dsn_group_builtin("quaternion", &q) == DSN_OK);
  char *text = nullptr;
  REQUIRE(dsn_group_to_string(q, &text) == DSN_OK);
  std::ofstream(dir / "q8.group") << take(text);
  std::ofstream(dir / "q8.gvec")
      << "gvec v1\ngroup q8.group\ngamma 0\nhandles\nbranches 2 4 7\n";
  dsn_certificate *c = nullptr;
  REQUIRE(dsn_realize_file((dir / "q8.gvec").c_str(), nullptr, &c) == DSN_OK);
  dsn_certificate_info info{};
  dsn_certificate_info_get(c, &info);
  CHECK(info.aut_order == 8);
  dsn_certificate_free(c);

  // an explicit group overrides the path in the file
  dsn_group *c8 = nullptr;
  REQUIRE(dsn_group_builtin("cyclic:8", &c8) == DSN_OK);
  CHECK(dsn_realize_file((dir / "q8.gvec").c_str(), c8, &c) ==
        DSN_ERR_VECTOR_INVALID);
  dsn_group_free(c8);
  dsn_group_free(q);
  fs::remove_all(dir);
}

TEST_CASE("status names") {
  CHECK(std::string(dsn_status_name(DSN_OK)) == "ok");
  CHECK(std::string(dsn_status_name(DSN_ERR_CAP_EXCEEDED)).size() > 0);
}
