/* C interface to the dessins library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a dsn_status; on
 * failure dsn_last_error() holds a message for the calling thread (parse
 * errors include "line L, column C"). Strings returned through char** are
 * heap-allocated and released with dsn_string_free.
 */
#ifndef DESSINS_DESSINS_H
#define DESSINS_DESSINS_H

#if defined(_WIN32)
#if defined(DESSINS_BUILDING_LIBRARY)
#define DSN_API __declspec(dllexport)
#else
#define DSN_API __declspec(dllimport)
#endif
#else
#define DSN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dsn_group dsn_group;
typedef struct dsn_dessin dsn_dessin;
typedef struct dsn_certificate dsn_certificate;

typedef enum dsn_status {
  DSN_OK = 0,
  DSN_ERR_INVALID_ARGUMENT = 1,
  DSN_ERR_PARSE = 2,
  DSN_ERR_VECTOR_INVALID = 3,
  DSN_ERR_CAP_EXCEEDED = 4,
  DSN_ERR_VERIFICATION_FAILED = 5,
  DSN_ERR_IO = 6,
  DSN_ERR_INTERNAL = 7
} dsn_status;

typedef struct dsn_certificate_info {
  int group_order;
  int base_n;
  int base_genus;
  int derived_n;
  int genus;
  int expected_genus;
  int aut_order;
  int iso_witness_found;
  int base_prime;
  int base_uniform;
  int derived_regular;
  int derived_uniform;
  int deck_in_aut;
  int quotient_matches_base;
  int verified;
} dsn_certificate_info;

DSN_API const char *dsn_last_error(void);
DSN_API const char *dsn_status_name(dsn_status status);
DSN_API void dsn_string_free(char *s);

/* Groups. `spec` is e.g. "cyclic:5", "dihedral:8", "symmetric:3",
 * "elementary_abelian:2:3" or "quaternion". */
DSN_API dsn_status dsn_group_builtin(const char *spec, dsn_group **out);
DSN_API dsn_status dsn_group_parse(const char *text, dsn_group **out);
DSN_API dsn_status dsn_group_read(const char *path, dsn_group **out);
DSN_API dsn_status dsn_group_to_string(const dsn_group *g, char **out);
DSN_API int dsn_group_order(const dsn_group *g);
DSN_API dsn_status dsn_group_element_order(const dsn_group *g, int x,
                                           int *out);
DSN_API void dsn_group_free(dsn_group *g);

/* Dessins. s0 and s1 hold n images each (0-based). */
DSN_API dsn_status dsn_dessin_new(int n, const int *s0, const int *s1,
                                  dsn_dessin **out);
DSN_API dsn_status dsn_dessin_parse(const char *text, dsn_dessin **out);
DSN_API dsn_status dsn_dessin_read(const char *path, dsn_dessin **out);
DSN_API dsn_status dsn_dessin_write(const dsn_dessin *d, const char *path);
DSN_API dsn_status dsn_dessin_to_string(const dsn_dessin *d, char **out);
DSN_API dsn_status dsn_dessin_to_dot(const dsn_dessin *d, char **out);
DSN_API dsn_status dsn_dessin_report(const dsn_dessin *d, char **out);
DSN_API int dsn_dessin_n(const dsn_dessin *d);
DSN_API dsn_status dsn_dessin_images(const dsn_dessin *d, int *s0, int *s1);
DSN_API dsn_status dsn_dessin_genus(const dsn_dessin *d, int *out);
DSN_API dsn_status dsn_dessin_aut_order(const dsn_dessin *d, int *out);
DSN_API dsn_status dsn_dessin_is_uniform(const dsn_dessin *d, int *out);
DSN_API dsn_status dsn_dessin_is_regular(const dsn_dessin *d, int *out);
DSN_API dsn_status dsn_dessin_is_isomorphic(const dsn_dessin *a,
                                            const dsn_dessin *b, int *out);
DSN_API void dsn_dessin_free(dsn_dessin *d);

/* strategy: "bouquet" or "triangulation". */
DSN_API dsn_status dsn_lemma1(int gamma, int r, const char *strategy,
                              dsn_dessin **out);
DSN_API dsn_status dsn_compose_eta(const dsn_dessin *inner, dsn_dessin **out);

/* Realisation. handles holds 2*gamma indices a1 b1 a2 b2 ...; branches
 * holds r indices. */
DSN_API dsn_status dsn_realize(const dsn_group *g, int gamma,
                               const int *handles, int r, const int *branches,
                               dsn_certificate **out);
/* Reads a gvec file; a relative `group` path is resolved against the gvec
 * file's directory. When `g` is non-null it is used instead. */
DSN_API dsn_status dsn_realize_file(const char *gvec_path, const dsn_group *g,
                                    dsn_certificate **out);
DSN_API dsn_status dsn_realize_unbranched(const dsn_group *g, const int *gens,
                                          int s, dsn_certificate **out);
DSN_API dsn_status dsn_realize_minimal(const dsn_group *g, int genus_cap,
                                       dsn_certificate **out);
DSN_API dsn_status dsn_certificate_info_get(const dsn_certificate *c,
                                            dsn_certificate_info *out);
DSN_API dsn_status dsn_certificate_report(const dsn_certificate *c,
                                          char **out);
DSN_API dsn_status dsn_certificate_derived(const dsn_certificate *c,
                                           dsn_dessin **out);
DSN_API void dsn_certificate_free(dsn_certificate *c);

/* Strong symmetric genus with a key/value report of the witness. */
DSN_API dsn_status dsn_strong_symmetric_genus(const dsn_group *g,
                                              int genus_cap, int *mu,
                                              char **report);

#ifdef __cplusplus
}
#endif

#endif /* DESSINS_DESSINS_H */
