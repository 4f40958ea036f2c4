#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prismatic/fixtures.hpp"

namespace prismatic {

/// Outcome of one deterministic certificate.  `detail` is reproducible
/// bit-for-bit across runs; timing is informational only.
struct CertificateResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

struct CertificateReport {
  std::vector<CertificateResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

enum class Suite { Core, Blv, Monster, All };

Suite parse_suite(const std::string& name);

/// Runs the selected certificates.  `fast` replaces the two exact resultant
/// identities by 100-point sampled versions (clearly labeled; not a
/// certificate).  Certificates are independent and run in parallel; the
/// report order is fixed.
CertificateReport certificate_suite(const FixtureSet& fx, Suite suite, bool fast = false,
                                    int threads = 2);

// Individual certificates (used by the acceptance suite as well).
namespace certs {

// -- core: the eigenvalue calculation ---------------------------------------
CertificateResult eigenvalue_law_symbolic();        // charpoly(g^2) law, generic + non-generic
CertificateResult det_s_symbolic();                 // det(S) = 6 sqrt(3) r s t (1+t); 2 sqrt(3) r s
CertificateResult first_invariant_symbolic();       // chi = -t^3/(1+t)^3; non-generic -1
CertificateResult partner_values_111(const FixtureSet& fx);  // 3 log 2 and 3 log(9825/5602)
CertificateResult partner_swap_symbolic();          // polarity exchanges f'_1, f'_2
CertificateResult elliptic_derivative_symbolic();   // closed form, 2+18s^2, limit 4+36s^2
CertificateResult translation_structures_symbolic();  // J eigenstructures, both modes

// -- monster: the partner-invariant closed form ------------------------------
CertificateResult monster_equivalence(const FixtureSet& fx, int samples = 200);
CertificateResult monster_positivity(const FixtureSet& fx, int samples = 1000);

// -- blv: the psi certificate chain ------------------------------------------
CertificateResult generators_closed_form(const FixtureSet& fx, bool fast = false);
CertificateResult generators_order3(const FixtureSet& fx);        // r1^3 ~ I, r2^3 ~ I, det(r1 r2) = 1
CertificateResult generators_parabolic_pappus(const FixtureSet& fx);  // trace law at (a,b)=(1,1)
CertificateResult psi_trace_identity(const FixtureSet& fx, int samples = 50);
CertificateResult psi_d0_factorization(const FixtureSet& fx);
CertificateResult boundary_restrictions(const FixtureSet& fx);
CertificateResult mu_comparison_chain(const FixtureSet& fx);
CertificateResult specialp_grid(const FixtureSet& fx);
CertificateResult psi_resultant(const FixtureSet& fx, bool fast = false);
CertificateResult r_pinned_forms(const FixtureSet& fx);
CertificateResult gradient_resultant(const FixtureSet& fx, bool fast = false);
CertificateResult sturm_g(const FixtureSet& fx);
CertificateResult duality_uniqueness(const FixtureSet& fx, int samples = 500);

// -- core: projective machinery ----------------------------------------------
CertificateResult box_relations(int samples = 100);
CertificateResult triple_product_invariance(int samples = 50);
CertificateResult orthogonal_pair_signs(int samples = 1000);

}  // namespace certs

}  // namespace prismatic
