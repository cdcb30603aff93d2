#include "dessins/dessins.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <new>
#include <string>

#include "dessins/compose.hpp"
#include "dessins/construct.hpp"
#include "dessins/cover.hpp"
#include "dessins/error.hpp"
#include "dessins/io.hpp"
#include "dessins/search.hpp"

struct dsn_group {
  dessins::FiniteGroup value;
};

struct dsn_dessin {
  dessins::Dessin value;
};

struct dsn_certificate {
  dessins::RealizationCertificate value;
};

namespace {

thread_local std::string last_error;

dsn_status status_for(dessins::Errc code) {
  using dessins::Errc;
  switch (code) {
  case Errc::Parse: return DSN_ERR_PARSE;
  case Errc::VectorInvalid:
  case Errc::NotGenerating:
  case Errc::GenusTooSmall: return DSN_ERR_VECTOR_INVALID;
  case Errc::CapExceeded: return DSN_ERR_CAP_EXCEEDED;
  case Errc::VerificationFailed: return DSN_ERR_VERIFICATION_FAILED;
  case Errc::Io: return DSN_ERR_IO;
  case Errc::InternalParity:
  case Errc::ConventionViolation:
  case Errc::Disconnected: return DSN_ERR_INTERNAL;
  default: return DSN_ERR_INVALID_ARGUMENT;
  }
}

// Runs f, translating exceptions into a status and the thread's message.
template <class F> dsn_status guarded(F &&f) noexcept {
  try {
    f();
    last_error.clear();
    return DSN_OK;
  } catch (const dessins::Error &e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return DSN_ERR_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return DSN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DSN_ERR_INTERNAL;
  }
}

void require(bool ok, const char *what) {
  if (!ok)
    throw dessins::Error(dessins::Errc::InvalidArgument, what);
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T> void emit_string(char **out, T &&make) {
  require(out != nullptr, "null output pointer");
  *out = dup_string(make());
}

} // namespace

extern "C" {

const char *dsn_last_error(void) { return last_error.c_str(); }

const char *dsn_status_name(dsn_status status) {
  switch (status) {
  case DSN_OK: return "ok";
  case DSN_ERR_INVALID_ARGUMENT: return "invalid argument";
  case DSN_ERR_PARSE: return "parse error";
  case DSN_ERR_VECTOR_INVALID: return "invalid generating vector";
  case DSN_ERR_CAP_EXCEEDED: return "cap exceeded";
  case DSN_ERR_VERIFICATION_FAILED: return "verification failed";
  case DSN_ERR_IO: return "i/o error";
  case DSN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dsn_string_free(char *s) { std::free(s); }

dsn_status dsn_group_builtin(const char *spec, dsn_group **out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new dsn_group{dessins::builtin_from_spec(spec)};
  });
}

dsn_status dsn_group_parse(const char *text, dsn_group **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new dsn_group{dessins::parse_group(text)};
  });
}

dsn_status dsn_group_read(const char *path, dsn_group **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new dsn_group{dessins::read_group_file(path)};
  });
}

dsn_status dsn_group_to_string(const dsn_group *g, char **out) {
  return guarded([&] {
    require(g, "null group");
    emit_string(out, [&] { return dessins::write_group(g->value); });
  });
}

int dsn_group_order(const dsn_group *g) { return g ? g->value.order() : 0; }

dsn_status dsn_group_element_order(const dsn_group *g, int x, int *out) {
  return guarded([&] {
    require(g && out, "null argument");
    require(x >= 0 && x < g->value.order(), "element index out of range");
    *out = dessins::element_order(g->value, x);
  });
}

void dsn_group_free(dsn_group *g) { delete g; }

dsn_status dsn_dessin_new(int n, const int *s0, const int *s1,
                          dsn_dessin **out) {
  return guarded([&] {
    require(n >= 1 && s0 && s1 && out, "bad dessin arguments");
    *out = new dsn_dessin{dessins::Dessin(dessins::Perm(std::vector<int>(s0, s0 + n)),
                                          dessins::Perm(std::vector<int>(s1, s1 + n)))};
  });
}

dsn_status dsn_dessin_parse(const char *text, dsn_dessin **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new dsn_dessin{dessins::parse_dessin(text)};
  });
}

dsn_status dsn_dessin_read(const char *path, dsn_dessin **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new dsn_dessin{dessins::read_dessin_file(path)};
  });
}

dsn_status dsn_dessin_write(const dsn_dessin *d, const char *path) {
  return guarded([&] {
    require(d && path, "null argument");
    dessins::write_text_file(path, dessins::write_dessin(d->value));
  });
}

dsn_status dsn_dessin_to_string(const dsn_dessin *d, char **out) {
  return guarded([&] {
    require(d, "null dessin");
    emit_string(out, [&] { return dessins::write_dessin(d->value); });
  });
}

dsn_status dsn_dessin_to_dot(const dsn_dessin *d, char **out) {
  return guarded([&] {
    require(d, "null dessin");
    emit_string(out, [&] { return dessins::to_dot(d->value); });
  });
}

dsn_status dsn_dessin_report(const dsn_dessin *d, char **out) {
  return guarded([&] {
    require(d, "null dessin");
    emit_string(out, [&] { return dessins::dessin_report(d->value); });
  });
}

int dsn_dessin_n(const dsn_dessin *d) { return d ? d->value.n() : 0; }

dsn_status dsn_dessin_images(const dsn_dessin *d, int *s0, int *s1) {
  return guarded([&] {
    require(d && s0 && s1, "null argument");
    const auto a = d->value.sigma0().images(), b = d->value.sigma1().images();
    std::copy(a.begin(), a.end(), s0);
    std::copy(b.begin(), b.end(), s1);
  });
}

dsn_status dsn_dessin_genus(const dsn_dessin *d, int *out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = dessins::genus(d->value);
  });
}

dsn_status dsn_dessin_aut_order(const dsn_dessin *d, int *out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = static_cast<int>(dessins::automorphisms(d->value).size());
  });
}

dsn_status dsn_dessin_is_uniform(const dsn_dessin *d, int *out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = dessins::is_uniform(d->value) ? 1 : 0;
  });
}

dsn_status dsn_dessin_is_regular(const dsn_dessin *d, int *out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = dessins::is_regular(d->value) ? 1 : 0;
  });
}

dsn_status dsn_dessin_is_isomorphic(const dsn_dessin *a, const dsn_dessin *b,
                                    int *out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = dessins::are_isomorphic(a->value, b->value) ? 1 : 0;
  });
}

void dsn_dessin_free(dsn_dessin *d) { delete d; }

dsn_status dsn_lemma1(int gamma, int r, const char *strategy,
                      dsn_dessin **out) {
  return guarded([&] {
    require(out, "null output pointer");
    auto s = dessins::Strategy::Bouquet;
    if (strategy) {
      const auto parsed = dessins::parse_strategy(strategy);
      require(parsed.has_value(), "strategy must be 'bouquet' or 'triangulation'");
      s = *parsed;
    }
    *out = new dsn_dessin{dessins::lemma1(gamma, r, s).dessin};
  });
}

dsn_status dsn_compose_eta(const dsn_dessin *inner, dsn_dessin **out) {
  return guarded([&] {
    require(inner && out, "null argument");
    *out = new dsn_dessin{dessins::compose(dessins::eta_table(), inner->value)};
  });
}

dsn_status dsn_realize(const dsn_group *g, int gamma, const int *handles, int r,
                       const int *branches, dsn_certificate **out) {
  return guarded([&] {
    require(g && out && gamma >= 0 && r >= 0, "bad realize arguments");
    require(gamma == 0 || handles, "null handles");
    require(r == 0 || branches, "null branches");
    dessins::GeneratingVector v{gamma, {}, {}};
    for (int i = 0; i < gamma; ++i)
      v.handles.emplace_back(handles[2 * i], handles[2 * i + 1]);
    if (r > 0)
      v.branches.assign(branches, branches + r);
    *out = new dsn_certificate{dessins::realize(g->value, v)};
  });
}

dsn_status dsn_realize_file(const char *gvec_path, const dsn_group *g,
                            dsn_certificate **out) {
  return guarded([&] {
    require(gvec_path && out, "null argument");
    const std::filesystem::path path(gvec_path);
    const auto file = dessins::read_gvec_file(path);
    if (g) {
      *out = new dsn_certificate{dessins::realize(g->value, file.vector)};
      return;
    }
    std::filesystem::path group_path(file.group_path);
    if (group_path.is_relative())
      group_path = path.parent_path() / group_path;
    const auto group = dessins::read_group_file(group_path);
    *out = new dsn_certificate{dessins::realize(group, file.vector)};
  });
}

dsn_status dsn_realize_unbranched(const dsn_group *g, const int *gens, int s,
                                  dsn_certificate **out) {
  return guarded([&] {
    require(g && out && s >= 0 && (s == 0 || gens), "bad arguments");
    *out = new dsn_certificate{
        dessins::realize_unbranched(g->value, std::vector<int>(gens, gens + s))};
  });
}

dsn_status dsn_realize_minimal(const dsn_group *g, int genus_cap,
                               dsn_certificate **out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new dsn_certificate{dessins::realize_minimal(g->value, genus_cap)};
  });
}

dsn_status dsn_certificate_info_get(const dsn_certificate *c,
                                    dsn_certificate_info *out) {
  return guarded([&] {
    require(c && out, "null argument");
    const auto &v = c->value;
    *out = dsn_certificate_info{v.group_order,
                                v.base.d.n(),
                                dessins::genus(v.base.d),
                                v.derived.n(),
                                v.genus_derived,
                                v.expected_genus,
                                v.aut_order,
                                v.iso_witness.has_value() ? 1 : 0,
                                v.base_prime ? 1 : 0,
                                v.base_nonuniform ? 0 : 1,
                                v.derived_regular ? 1 : 0,
                                v.derived_uniform ? 1 : 0,
                                v.deck_in_aut ? 1 : 0,
                                v.quotient_matches_base ? 1 : 0,
                                v.verified() ? 1 : 0};
  });
}

dsn_status dsn_certificate_report(const dsn_certificate *c, char **out) {
  return guarded([&] {
    require(c, "null certificate");
    emit_string(out, [&] { return dessins::certificate_report(c->value); });
  });
}

dsn_status dsn_certificate_derived(const dsn_certificate *c, dsn_dessin **out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new dsn_dessin{c->value.derived};
  });
}

void dsn_certificate_free(dsn_certificate *c) { delete c; }

dsn_status dsn_strong_symmetric_genus(const dsn_group *g, int genus_cap,
                                      int *mu, char **report) {
  return guarded([&] {
    require(g && mu, "null argument");
    const auto result = dessins::strong_symmetric_genus(g->value, genus_cap);
    *mu = result.mu;
    if (report)
      *report = dup_string(dessins::mu_report(g->value, result));
  });
}

} // extern "C"
