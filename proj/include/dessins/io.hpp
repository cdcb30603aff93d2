#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dessins/cover.hpp"
#include "dessins/dessin.hpp"
#include "dessins/group.hpp"
#include "dessins/search.hpp"

namespace dessins {

// Text formats. Readers throw ParseError (line/column) on malformed input
// and Error(Errc::Io) when a file cannot be opened.
//
//   group v1            dessin v1           gvec v1
//   order <m>           n <count>           group <path>
//   <m rows of m ints>  s0 <n images>       gamma <g>
//   [label <name>]      s1 <n images>       handles <2g ints>
//                                           branches <r ints>

std::string write_group(const FiniteGroup &g);
FiniteGroup parse_group(std::string_view text);
FiniteGroup read_group_file(const std::filesystem::path &path);

std::string write_dessin(const Dessin &d);
Dessin parse_dessin(std::string_view text);
Dessin read_dessin_file(const std::filesystem::path &path);

struct GvecFile {
  std::string group_path; // as written in the file
  GeneratingVector vector;
};

std::string write_gvec(const GvecFile &f);
GvecFile parse_gvec(std::string_view text);
GvecFile read_gvec_file(const std::filesystem::path &path);

void write_text_file(const std::filesystem::path &path, std::string_view text);

// Key/value block followed by a blank line and the derived dessin.
std::string certificate_report(const RealizationCertificate &c);

std::string dessin_report(const Dessin &d);

std::string mu_report(const FiniteGroup &g, const SymmetricGenus &s);

} // namespace dessins
