#include "prismatic/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef __linux__
#include <unistd.h>
#endif

#ifndef PRISMATIC_DEFAULT_FIXTURE_DIR
#define PRISMATIC_DEFAULT_FIXTURE_DIR ""
#endif

namespace prismatic {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

struct PolyReader {
  VarList vars;
  MPoly current;
  bool started = false;

  void header(const std::string& rest) {
    std::istringstream is(rest);
    std::vector<std::string> names;
    std::string n;
    while (is >> n) names.push_back(n);
    vars = make_vars(std::move(names));
    current = MPoly(vars);
    started = true;
  }

  void term(const std::string& line) {
    if (!started) throw std::runtime_error("fixture: term before 'vars' header");
    std::istringstream is(line);
    std::string coef;
    is >> coef;
    std::vector<int> exps(vars->size(), 0);
    for (size_t i = 0; i < vars->size(); ++i) {
      if (!(is >> exps[i])) throw std::runtime_error("fixture: malformed term line: " + line);
    }
    current += MPoly::term(vars, Rat::parse(coef), exps);
  }
};

}  // namespace

MPoly read_poly_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw missing_fixture_error("cannot open fixture " + file.string());
  PolyReader rd;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    std::istringstream peek(line);
    std::string tok;
    if (!(peek >> tok)) continue;
    if (tok == "vars") {
      std::string rest;
      std::getline(peek, rest);
      rd.header(rest);
    } else if (tok == "entry") {
      throw std::runtime_error("fixture: matrix file read as polynomial: " + file.string());
    } else {
      rd.term(line);
    }
  }
  if (!rd.started) throw std::runtime_error("fixture: missing 'vars' header in " + file.string());
  return rd.current;
}

std::array<MPoly, 9> read_matrix_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw missing_fixture_error("cannot open fixture " + file.string());
  PolyReader rd;
  std::array<MPoly, 9> out;
  int slot = -1;
  std::string line;
  auto flush = [&]() {
    if (slot >= 0) out[static_cast<size_t>(slot)] = rd.current;
  };
  while (std::getline(in, line)) {
    line = strip_comment(line);
    std::istringstream peek(line);
    std::string tok;
    if (!(peek >> tok)) continue;
    if (tok == "vars") {
      std::string rest;
      std::getline(peek, rest);
      rd.header(rest);
    } else if (tok == "entry") {
      int i = -1, j = -1;
      peek >> i >> j;
      if (i < 0 || i > 2 || j < 0 || j > 2)
        throw std::runtime_error("fixture: bad entry indices in " + file.string());
      flush();
      slot = 3 * i + j;
      rd.current = MPoly(rd.vars);
    } else {
      rd.term(line);
    }
  }
  flush();
  if (!rd.started) throw std::runtime_error("fixture: missing 'vars' header in " + file.string());
  for (auto& p : out)
    if (p.vars()->empty()) p = MPoly(rd.vars);  // absent entries are zero
  return out;
}

void write_poly_file(const std::filesystem::path& file, const MPoly& p, const std::string& comment) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write fixture " + file.string());
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "vars";
  for (const auto& v : *p.vars()) out << " " << v;
  out << "\n";
  for (const auto& [m, c] : p.terms()) {
    out << c.str();
    for (int i = 0; i < p.nvars(); ++i) out << " " << static_cast<int>(m[i]);
    out << "\n";
  }
}

std::filesystem::path FixtureSet::locate(const std::string& explicit_dir) {
  namespace fs = std::filesystem;
  auto usable = [](const fs::path& p) { return !p.empty() && fs::exists(p / "psi.poly"); };
  if (!explicit_dir.empty()) {
    fs::path p(explicit_dir);
    if (usable(p)) return p;
    throw missing_fixture_error("fixture directory " + explicit_dir + " has no psi.poly");
  }
  if (const char* env = std::getenv("PRISMATIC_FIXTURES")) {
    fs::path p(env);
    if (usable(p)) return p;
  }
#ifdef __linux__
  {
    char buf[4096];
    ssize_t n = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (n > 0) {
      buf[n] = '\0';
      fs::path exe(buf);
      fs::path p = exe.parent_path().parent_path() / "share" / "prismatic" / "fixtures";
      if (usable(p)) return p;
    }
  }
#endif
  fs::path fallback(PRISMATIC_DEFAULT_FIXTURE_DIR);
  if (usable(fallback)) return fallback;
  throw missing_fixture_error("fixture directory not found (set PRISMATIC_FIXTURES)");
}

FixtureSet::FixtureSet(const std::filesystem::path& dir) : dir_(dir) {
  psi_ = read_poly_file(dir / "psi.poly");
  mu1_ = read_poly_file(dir / "mu1.poly");
  mu2_ = read_poly_file(dir / "mu2.poly");
  r_ab_ = read_poly_file(dir / "r_ab.poly");
  g_a_ = read_poly_file(dir / "g_a.poly");
  monster_a_ = read_poly_file(dir / "monster_a.poly");
  monster_b_ = read_poly_file(dir / "monster_b.poly");
  nongeneric_n_ = read_poly_file(dir / "nongeneric_n.poly");
  nongeneric_d_ = read_poly_file(dir / "nongeneric_d.poly");
  r1_num_ = read_matrix_file(dir / "r1_num.poly");
  r2_num_ = read_matrix_file(dir / "r2_num.poly");
}

}  // namespace prismatic
