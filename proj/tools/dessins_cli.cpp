// Command-line front end. Everything goes through the C interface.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dessins/dessins.h"

namespace {

// Exit codes: 0 success, 1 other failure, 2 parse error, 3 invalid
// generating vector, 4 size cap exceeded.
int exit_code(dsn_status s) {
  switch (s) {
  case DSN_OK: return 0;
  case DSN_ERR_PARSE: return 2;
  case DSN_ERR_VECTOR_INVALID: return 3;
  case DSN_ERR_CAP_EXCEEDED: return 4;
  default: return 1;
  }
}

struct Failure {
  dsn_status status;
};

void check(dsn_status s) {
  if (s != DSN_OK)
    throw Failure{s};
}

struct GroupFree {
  void operator()(dsn_group *g) const { dsn_group_free(g); }
};
struct DessinFree {
  void operator()(dsn_dessin *d) const { dsn_dessin_free(d); }
};
struct CertFree {
  void operator()(dsn_certificate *c) const { dsn_certificate_free(c); }
};
struct StringFree {
  void operator()(char *s) const { dsn_string_free(s); }
};
using GroupPtr = std::unique_ptr<dsn_group, GroupFree>;
using DessinPtr = std::unique_ptr<dsn_dessin, DessinFree>;
using CertPtr = std::unique_ptr<dsn_certificate, CertFree>;
using StringPtr = std::unique_ptr<char, StringFree>;

// "builtin:<spec>" selects a catalog group; anything else is a group file.
GroupPtr load_group(const std::string &arg) {
  dsn_group *g = nullptr;
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0)
    check(dsn_group_builtin(arg.substr(prefix.size()).c_str(), &g));
  else
    check(dsn_group_read(arg.c_str(), &g));
  return GroupPtr(g);
}

DessinPtr load_dessin(const std::string &path) {
  dsn_dessin *d = nullptr;
  check(dsn_dessin_read(path.c_str(), &d));
  return DessinPtr(d);
}

std::string take(dsn_status s, char *&raw) {
  StringPtr owned(raw);
  check(s);
  return owned ? std::string(owned.get()) : std::string();
}

void write_file(const std::string &path, const std::string &text) {
  std::FILE *f = std::fopen(path.c_str(), "wb");
  if (!f || std::fwrite(text.data(), 1, text.size(), f) != text.size()) {
    if (f)
      std::fclose(f);
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{DSN_ERR_IO};
  }
  std::fclose(f);
}

struct Output {
  std::string out;
  bool dot = false;
};

// Writes the dessin to --out (or stdout) and DOT next to it when requested.
void emit_dessin(const dsn_dessin *d, const Output &o, bool print_if_no_out) {
  char *raw = nullptr;
  const std::string text = take(dsn_dessin_to_string(d, &raw), raw);
  if (!o.out.empty())
    write_file(o.out, text);
  else if (print_if_no_out)
    std::cout << text;
  if (o.dot) {
    raw = nullptr;
    const std::string dot = take(dsn_dessin_to_dot(d, &raw), raw);
    if (!o.out.empty())
      write_file(o.out + ".dot", dot);
    else
      std::cout << dot;
  }
}

void print_certificate(const dsn_certificate *c, const Output &o) {
  char *raw = nullptr;
  std::cout << take(dsn_certificate_report(c, &raw), raw);
  dsn_dessin *d = nullptr;
  check(dsn_certificate_derived(c, &d));
  DessinPtr derived(d);
  emit_dessin(derived.get(), o, false);
}

void add_output_flags(CLI::App *cmd, Output &o) {
  cmd->add_option("--out", o.out, "Write the resulting dessin to this path");
  cmd->add_flag("--dot", o.dot, "Also emit Graphviz DOT (<out>.dot or stdout)");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Dessins d'enfants with prescribed automorphism group"};
  app.require_subcommand(1);

  Output out;

  std::vector<std::string> realize_args;
  auto *realize = app.add_subcommand(
      "realize", "Realize a generating vector: [group] <gvec-file>");
  realize->add_option("files", realize_args,
                      "Optional group file (or builtin:<spec>) then gvec file")
      ->required()
      ->expected(1, 2);
  add_output_flags(realize, out);

  std::string unbranched_group;
  std::vector<int> unbranched_gens;
  auto *unbranched = app.add_subcommand(
      "realize-unbranched", "Unbranched realization over a genus-s base");
  unbranched->add_option("group", unbranched_group, "Group file or builtin:<spec>")
      ->required();
  unbranched->add_option("gens", unbranched_gens, "s >= 2 generating elements")
      ->required();
  add_output_flags(unbranched, out);

  int lemma_gamma = 0, lemma_r = 0;
  std::string strategy = "bouquet";
  auto *lemma = app.add_subcommand(
      "lemma1", "Non-uniform prime-degree dessin of genus gamma with >= r whites");
  lemma->add_option("gamma", lemma_gamma)->required()->check(CLI::NonNegativeNumber);
  lemma->add_option("r", lemma_r)->required()->check(CLI::NonNegativeNumber);
  lemma->add_option("--strategy", strategy, "bouquet or triangulation")
      ->check(CLI::IsMember({"bouquet", "triangulation"}));
  add_output_flags(lemma, out);

  std::string verify_path;
  auto *verify = app.add_subcommand("verify", "Report invariants of a dessin file");
  verify->add_option("dessin", verify_path)->required();
  verify->add_flag("--dot", out.dot, "Also print Graphviz DOT");

  std::string compose_path;
  auto *compose = app.add_subcommand(
      "compose-eta", "Compose with eta(z) = 16 z (z - 3/4)^2");
  compose->add_option("dessin", compose_path)->required();
  add_output_flags(compose, out);

  std::string mu_group;
  int cap = 20;
  bool mu_realize = false;
  auto *mu = app.add_subcommand("mu", "Strong symmetric genus of a group");
  mu->add_option("group", mu_group, "Group file or builtin:<spec>")->required();
  mu->add_option("--cap", cap, "Genus cap for the search")->check(CLI::Range(2, 1000));
  mu->add_flag("--realize", mu_realize, "Also realize a minimal-genus dessin");
  add_output_flags(mu, out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (realize->parsed()) {
      dsn_certificate *c = nullptr;
      if (realize_args.size() == 2) {
        auto g = load_group(realize_args[0]);
        check(dsn_realize_file(realize_args[1].c_str(), g.get(), &c));
      } else {
        check(dsn_realize_file(realize_args[0].c_str(), nullptr, &c));
      }
      print_certificate(CertPtr(c).get(), out);
    } else if (unbranched->parsed()) {
      auto g = load_group(unbranched_group);
      dsn_certificate *c = nullptr;
      check(dsn_realize_unbranched(g.get(), unbranched_gens.data(),
                                   static_cast<int>(unbranched_gens.size()), &c));
      print_certificate(CertPtr(c).get(), out);
    } else if (lemma->parsed()) {
      dsn_dessin *d = nullptr;
      check(dsn_lemma1(lemma_gamma, lemma_r, strategy.c_str(), &d));
      DessinPtr owned(d);
      char *raw = nullptr;
      std::cout << "strategy " << strategy << '\n'
                << take(dsn_dessin_report(owned.get(), &raw), raw);
      emit_dessin(owned.get(), out, false);
    } else if (verify->parsed()) {
      auto d = load_dessin(verify_path);
      char *raw = nullptr;
      std::cout << take(dsn_dessin_report(d.get(), &raw), raw);
      if (out.dot) {
        raw = nullptr;
        std::cout << take(dsn_dessin_to_dot(d.get(), &raw), raw);
      }
    } else if (compose->parsed()) {
      auto inner = load_dessin(compose_path);
      dsn_dessin *d = nullptr;
      check(dsn_compose_eta(inner.get(), &d));
      DessinPtr owned(d);
      char *raw = nullptr;
      std::cout << take(dsn_dessin_report(owned.get(), &raw), raw);
      emit_dessin(owned.get(), out, false);
    } else if (mu->parsed()) {
      auto g = load_group(mu_group);
      int value = 0;
      char *raw = nullptr;
      std::cout << take(dsn_strong_symmetric_genus(g.get(), cap, &value, &raw),
                        raw);
      if (mu_realize) {
        dsn_certificate *c = nullptr;
        check(dsn_realize_minimal(g.get(), cap, &c));
        std::cout << '\n';
        print_certificate(CertPtr(c).get(), out);
      }
    }
  } catch (const Failure &f) {
    const char *msg = dsn_last_error();
    std::cerr << "error (" << dsn_status_name(f.status) << "): "
              << (msg && *msg ? msg : "failed") << '\n';
    return exit_code(f.status);
  }
  return 0;
}
