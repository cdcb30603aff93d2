#include "dessins/io.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "dessins/construct.hpp"
#include "dessins/error.hpp"

namespace dessins {

namespace {

struct Token {
  std::string_view text;
  int column; // 1-based
};

struct Line {
  int number; // 1-based
  std::vector<Token> tokens;
  int width;
};

// Non-blank lines split on spaces and tabs.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    Line line{++number, {}, static_cast<int>(raw.size())};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
        ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')
        ++i;
      if (i > start)
        line.tokens.push_back({raw.substr(start, i - start),
                               static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
    if (end >= text.size())
      break;
    pos = end + 1;
  }
  return lines;
}

class Cursor {
public:
  explicit Cursor(std::string_view text)
      : lines_(tokenize(text)),
        last_(static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1) {}

  // Next line, which must start with `keyword`.
  const Line &expect(std::string_view keyword) {
    if (i_ >= lines_.size())
      throw ParseError(last_, 1, "unexpected end of input, expected '" +
                                     std::string(keyword) + "'");
    const Line &line = lines_[i_++];
    if (line.tokens.front().text != keyword)
      throw ParseError(line.number, line.tokens.front().column,
                       "expected '" + std::string(keyword) + "', found '" +
                           std::string(line.tokens.front().text) + "'");
    return line;
  }

  const Line *peek() const { return i_ < lines_.size() ? &lines_[i_] : nullptr; }
  const Line &take() { return lines_[i_++]; }

  const Line &next_any(const std::string &what) {
    if (i_ >= lines_.size())
      throw ParseError(last_, 1, "unexpected end of input, expected " + what);
    return lines_[i_++];
  }

  void expect_end() const {
    if (const Line *extra = peek())
      throw ParseError(extra->number, extra->tokens.front().column,
                       "unexpected trailing content '" +
                           std::string(extra->tokens.front().text) + "'");
  }

private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
  int last_;
};

long long parse_int(const Line &line, const Token &t) {
  long long value = 0;
  const char *first = t.text.data();
  const char *last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line.number, t.column,
                     "expected an integer, found '" + std::string(t.text) + "'");
  return value;
}

void expect_header(Cursor &c, std::string_view kind) {
  const Line &line = c.expect(kind);
  if (line.tokens.size() != 2 || line.tokens[1].text != "v1")
    throw ParseError(line.number,
                     line.tokens.size() > 1 ? line.tokens[1].column
                                            : line.width + 1,
                     "expected '" + std::string(kind) + " v1'");
}

// Values of `line` after its first `skip` tokens; exactly `count` of them.
std::vector<int> values(const Line &line, std::size_t skip, long long count,
                        const std::string &what) {
  const long long got = static_cast<long long>(line.tokens.size() - skip);
  if (got != count)
    throw ParseError(
        line.number,
        got > count ? line.tokens[skip + static_cast<std::size_t>(count)].column
                    : line.width + 1,
        what + ": expected " + std::to_string(count) + " values, found " +
            std::to_string(got));
  std::vector<int> out;
  for (std::size_t i = skip; i < line.tokens.size(); ++i) {
    const long long v = parse_int(line, line.tokens[i]);
    if (v < INT32_MIN || v > INT32_MAX)
      throw ParseError(line.number, line.tokens[i].column,
                       "integer out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

long long keyed_count(Cursor &c, std::string_view keyword, long long min,
                      long long max) {
  const Line &line = c.expect(keyword);
  if (line.tokens.size() != 2)
    throw ParseError(line.number,
                     line.tokens.size() > 2 ? line.tokens[2].column
                                            : line.width + 1,
                     "expected '" + std::string(keyword) + " <count>'");
  const long long v = parse_int(line, line.tokens[1]);
  if (v < min || v > max)
    throw ParseError(line.number, line.tokens[1].column,
                     std::string(keyword) + " must lie in " +
                         std::to_string(min) + ".." + std::to_string(max));
  return v;
}

// Diagnostic names the repeated image and points at its second occurrence.
Perm parse_perm_line(Cursor &c, std::string_view keyword, long long n) {
  const Line &line = c.expect(keyword);
  const auto images = values(line, 1, n, std::string(keyword));
  std::vector<int> first_pos(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int y = images[k];
    const int column = line.tokens[k + 1].column;
    if (y < 0 || y >= n)
      throw ParseError(line.number, column,
                       std::string(keyword) + ": image " + std::to_string(y) +
                           " out of range 0.." + std::to_string(n - 1));
    auto &prev = first_pos[static_cast<std::size_t>(y)];
    if (prev >= 0)
      throw ParseError(line.number, column,
                       std::string(keyword) +
                           " is not a bijection: repeated image " +
                           std::to_string(y) + " (positions " +
                           std::to_string(prev) + " and " + std::to_string(k) +
                           ")");
    prev = static_cast<int>(k);
  }
  return Perm(images);
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefix parse diagnostics with the file name.
template <class F> auto parse_file(const std::filesystem::path &path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError &e) {
    const std::string what = e.what();
    throw ParseError(e.line(), e.column(),
                     path.string() + ": " + what.substr(what.find(": ") + 2));
  }
}

std::string join(const std::vector<int> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

const char *flag(bool b) { return b ? "true" : "false"; }

} // namespace

std::string write_group(const FiniteGroup &g) {
  std::ostringstream os;
  os << "group v1\norder " << g.order() << '\n';
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b)
      os << (b ? " " : "") << g.mul(a, b);
    os << '\n';
  }
  if (!g.label().empty())
    os << "label " << g.label() << '\n';
  return os.str();
}

FiniteGroup parse_group(std::string_view text) {
  Cursor c(text);
  expect_header(c, "group");
  const auto m = keyed_count(c, "order", 1, kBuiltinOrderCap);
  std::vector<std::vector<int>> table;
  for (long long a = 0; a < m; ++a) {
    const std::string what = "table row " + std::to_string(a);
    const Line &row = c.next_any(what);
    auto entries = values(row, 0, m, what);
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k] < 0 || entries[k] >= m)
        throw ParseError(row.number, row.tokens[k].column,
                         "entry " + std::to_string(entries[k]) +
                             " out of range 0.." + std::to_string(m - 1));
    table.push_back(std::move(entries));
  }
  std::string label;
  int label_line = 0;
  if (const Line *line = c.peek(); line && line->tokens.front().text == "label") {
    c.take();
    label_line = line->number;
    if (line->tokens.size() < 2)
      throw ParseError(line->number, line->width + 1, "label: missing name");
    for (std::size_t i = 1; i < line->tokens.size(); ++i)
      label += (i > 1 ? " " : "") + std::string(line->tokens[i].text);
  }
  c.expect_end();
  try {
    return FiniteGroup(std::move(table), label);
  } catch (const Error &e) {
    if (e.code() != Errc::InvalidGroup)
      throw;
    throw ParseError(label_line ? label_line : 3, 1,
                     std::string("invalid group table: ") + e.what());
  }
}

FiniteGroup read_group_file(const std::filesystem::path &path) {
  return parse_file(path, [](std::string_view t) { return parse_group(t); });
}

std::string write_dessin(const Dessin &d) {
  std::ostringstream os;
  os << "dessin v1\nn " << d.n() << "\ns0";
  for (int x : d.sigma0().images())
    os << ' ' << x;
  os << "\ns1";
  for (int x : d.sigma1().images())
    os << ' ' << x;
  os << '\n';
  return os.str();
}

Dessin parse_dessin(std::string_view text) {
  Cursor c(text);
  expect_header(c, "dessin");
  const auto n = keyed_count(c, "n", 1, 1'000'000);
  Perm s0 = parse_perm_line(c, "s0", n);
  const int s1_line = c.peek() ? c.peek()->number : 0;
  Perm s1 = parse_perm_line(c, "s1", n);
  c.expect_end();
  try {
    return Dessin(std::move(s0), std::move(s1));
  } catch (const Error &e) {
    throw ParseError(s1_line, 1, std::string("invalid dessin: ") + e.what());
  }
}

Dessin read_dessin_file(const std::filesystem::path &path) {
  return parse_file(path, [](std::string_view t) { return parse_dessin(t); });
}

std::string write_gvec(const GvecFile &f) {
  std::ostringstream os;
  os << "gvec v1\ngroup " << f.group_path << "\ngamma " << f.vector.gamma
     << "\nhandles";
  for (auto [a, b] : f.vector.handles)
    os << ' ' << a << ' ' << b;
  os << "\nbranches";
  for (int c : f.vector.branches)
    os << ' ' << c;
  os << '\n';
  return os.str();
}

GvecFile parse_gvec(std::string_view text) {
  Cursor c(text);
  expect_header(c, "gvec");
  GvecFile f;
  {
    const Line &line = c.expect("group");
    if (line.tokens.size() != 2)
      throw ParseError(line.number,
                       line.tokens.size() > 2 ? line.tokens[2].column
                                              : line.width + 1,
                       "expected 'group <path>'");
    f.group_path = std::string(line.tokens[1].text);
  }
  f.vector.gamma = static_cast<int>(keyed_count(c, "gamma", 0, 100'000));
  const auto handles =
      values(c.expect("handles"), 1, 2LL * f.vector.gamma, "handles");
  for (std::size_t i = 0; i + 1 < handles.size(); i += 2)
    f.vector.handles.emplace_back(handles[i], handles[i + 1]);
  const Line &branches = c.expect("branches");
  f.vector.branches = values(branches, 1,
                             static_cast<long long>(branches.tokens.size()) - 1,
                             "branches");
  c.expect_end();
  return f;
}

GvecFile read_gvec_file(const std::filesystem::path &path) {
  return parse_file(path, [](std::string_view t) { return parse_gvec(t); });
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(Errc::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out)
    throw Error(Errc::Io, "write to '" + path.string() + "' failed");
}

std::string certificate_report(const RealizationCertificate &c) {
  std::ostringstream os;
  os << "certificate v1\n"
     << "group " << (c.group_label.empty() ? "unnamed" : c.group_label) << '\n'
     << "group_order " << c.group_order << '\n'
     << "signature " << to_string(c.signature) << '\n'
     << "base_n " << c.base.d.n() << '\n'
     << "base_genus " << genus(c.base.d) << '\n'
     << "base_prime " << flag(c.base_prime) << '\n'
     << "base_uniform " << flag(!c.base_nonuniform) << '\n'
     << "derived_n " << c.derived.n() << '\n'
     << "genus " << c.genus_derived << '\n'
     << "expected_genus " << c.expected_genus << '\n'
     << "aut_order " << c.aut_order << '\n'
     << "iso_witness " << (c.iso_witness ? "found" : "absent") << '\n'
     << "quotient_signature " << to_string(c.signature_recovered) << '\n'
     << "quotient_matches_base " << flag(c.quotient_matches_base) << '\n'
     << "deck_in_aut " << flag(c.deck_in_aut) << '\n'
     << "derived_regular " << flag(c.derived_regular) << '\n'
     << "derived_uniform " << flag(c.derived_uniform) << '\n'
     << "passport " << to_string(passport(c.derived)) << '\n'
     << "verified " << flag(c.verified()) << '\n'
     << '\n'
     << write_dessin(c.derived);
  return os.str();
}

std::string dessin_report(const Dessin &d) {
  const auto p = passport(d);
  const auto aut = automorphisms(d);
  std::ostringstream os;
  os << "n " << d.n() << '\n'
     << "genus " << genus(d) << '\n'
     << "black_degrees " << join(p.black_degrees) << '\n'
     << "white_degrees " << join(p.white_degrees) << '\n'
     << "face_degrees " << join(p.face_degrees) << '\n'
     << "aut_order " << aut.size() << '\n'
     << "prime " << flag(is_prime(d.n())) << '\n'
     << "uniform " << flag(is_uniform(d)) << '\n'
     << "regular " << flag(static_cast<int>(aut.size()) == d.n()) << '\n';
  return os.str();
}

std::string mu_report(const FiniteGroup &g, const SymmetricGenus &s) {
  std::ostringstream os;
  os << "group " << (g.label().empty() ? "unnamed" : g.label()) << '\n'
     << "group_order " << g.order() << '\n'
     << "mu " << s.mu << '\n'
     << "signature " << to_string(s.signature) << '\n'
     << "rejected_signatures " << s.rejected << '\n'
     << "handles";
  for (auto [a, b] : s.witness.handles)
    os << ' ' << a << ' ' << b;
  os << "\nbranches";
  for (int c : s.witness.branches)
    os << ' ' << c;
  os << '\n';
  return os.str();
}

} // namespace dessins
