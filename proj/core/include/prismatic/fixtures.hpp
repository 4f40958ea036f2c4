#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>

#include "prismatic/mpoly.hpp"

namespace prismatic {

/// Plain-text polynomial files: `vars x y z` header, then one term per line
/// as `coef e1 e2 ... en` with rational coefficients.  Matrix files add
/// `entry i j` section markers.  `#` starts a comment.
MPoly read_poly_file(const std::filesystem::path& file);
std::array<MPoly, 9> read_matrix_file(const std::filesystem::path& file);
void write_poly_file(const std::filesystem::path& file, const MPoly& p,
                     const std::string& comment = "");

struct missing_fixture_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The pinned polynomial certificates used throughout the verification
/// machinery, loaded once from a fixture directory.
class FixtureSet {
 public:
  explicit FixtureSet(const std::filesystem::path& dir);

  /// Resolution order: explicit argument, PRISMATIC_FIXTURES environment
  /// variable, <executable>/../share/prismatic/fixtures, build-time default.
  static std::filesystem::path locate(const std::string& explicit_dir = "");

  const std::filesystem::path& dir() const { return dir_; }

  // duality polynomial psi(a,b,c,d) and its boundary restrictions
  const MPoly& psi() const { return psi_; }
  const MPoly& mu1() const { return mu1_; }
  const MPoly& mu2() const { return mu2_; }
  // resultant certificates
  const MPoly& r_ab() const { return r_ab_; }
  const MPoly& g_a() const { return g_a_; }
  // partner-invariant numerator/denominator polynomials, generic case:
  // tau' = -(1+t)^3 A^3 / (t^3 B^3)
  const MPoly& monster_a() const { return monster_a_; }
  const MPoly& monster_b() const { return monster_b_; }
  // non-generic case: tau' = -N^3 / D^3
  const MPoly& nongeneric_n() const { return nongeneric_n_; }
  const MPoly& nongeneric_d() const { return nongeneric_d_; }
  // order-3 generators: r1 = P / ((c^2-1)(d^2-1)), r2 = Q / (4 a^2 b^2)
  const std::array<MPoly, 9>& r1_num() const { return r1_num_; }
  const std::array<MPoly, 9>& r2_num() const { return r2_num_; }

 private:
  std::filesystem::path dir_;
  MPoly psi_, mu1_, mu2_, r_ab_, g_a_;
  MPoly monster_a_, monster_b_, nongeneric_n_, nongeneric_d_;
  std::array<MPoly, 9> r1_num_, r2_num_;
};

}  // namespace prismatic
