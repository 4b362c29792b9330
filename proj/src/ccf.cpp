#include "ccmotion/ccf.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccmotion/error.hpp"

namespace cc {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(Errc::parse_error, what);
}

}  // namespace

Configuration read_ccf(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "ccf 1")
    fail("first line must be exactly \"ccf 1\"");
  if (!std::getline(in, line)) fail("missing header line \"n=... r=...\"");
  int n = 0, r = 0;
  char trailing;
  std::istringstream header(line);
  std::string n_tok, r_tok;
  if (!(header >> n_tok >> r_tok) || header >> trailing)
    fail("header must be \"n=<int> r=<int>\"");
  if (n_tok.rfind("n=", 0) != 0 || r_tok.rfind("r=", 0) != 0)
    fail("header must be \"n=<int> r=<int>\"");
  try {
    std::size_t used = 0;
    n = std::stoi(n_tok.substr(2), &used);
    if (used != n_tok.size() - 2) fail("bad n value");
    r = std::stoi(r_tok.substr(2), &used);
    if (used != r_tok.size() - 2) fail("bad r value");
  } catch (const std::exception&) {
    fail("header must be \"n=<int> r=<int>\"");
  }
  if (n <= 0 || r <= 0) fail("n and r must be positive");

  std::vector<color_t> colors;
  colors.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    if (!std::getline(in, line))
      fail("expected " + std::to_string(n) + " matrix rows, got " +
           std::to_string(row));
    std::istringstream cells(line);
    long v = 0;
    int col = 0;
    while (cells >> v) {
      if (col == n) fail("row " + std::to_string(row) + " has extra entries");
      if (v < 0 || v >= r)
        fail("color " + std::to_string(v) + " out of range [0, " +
             std::to_string(r) + ") at row " + std::to_string(row));
      colors.push_back(static_cast<color_t>(v));
      ++col;
    }
    if (!cells.eof())
      fail("row " + std::to_string(row) + " has a non-integer entry");
    if (col != n)
      fail("row " + std::to_string(row) + " has " + std::to_string(col) +
           " entries, expected " + std::to_string(n));
  }
  return Configuration(n, r, std::move(colors));
}

Configuration read_ccf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return read_ccf(in);
}

void write_ccf(std::ostream& out, const Configuration& cfg) {
  out << "ccf 1\n";
  out << "n=" << cfg.n() << " r=" << cfg.rank() << "\n";
  for (int u = 0; u < cfg.n(); ++u) {
    for (int v = 0; v < cfg.n(); ++v) {
      if (v) out << ' ';
      out << cfg.color(u, v);
    }
    out << '\n';
  }
}

void write_ccf_file(const std::string& path, const Configuration& cfg) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path + " for writing");
  write_ccf(out, cfg);
  out.flush();
  if (!out) fail("write to " + path + " failed");
}

}  // namespace cc
