#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gobs/circle_set.hpp"
#include "gobs/sets.hpp"
#include "gobs/zak.hpp"

namespace gobs {

// Witness point selection. The kernel construction uses S = q - p + 2 column
// groups s_t = t * k^{-1} (mod mu) whose cancellation constraints are the
// region shifted by -t/mu; for k = 1 this is the plain range s = 0..q-p+1.
// The feasible set F (in the scaled variable r*x) is the intersection of
// those shifted regions; x0 is the midpoint of the largest arc of F over r.
struct WitnessPoint {
  Rational x0;
  Rational scaled_x0;        // r * x0, a point of F
  CircleIntervalSet feasible;
  long long groups = 0;      // S; q - p + 2 unless the reduced range was needed
  std::vector<long long> group_indices;  // s_t, t = 0..S-1; s_0 = 0
  bool reduced_range = false;
};

WitnessPoint find_x0(int n, const ObstructionParams& params, const Rational& b);

// Constructive non-frame certificate: x0, the column-group constants K_s,
// and q - p + 1 kernel vectors v_s - v_0 of Phi(x0, 0), plus the numerical
// evidence (residuals, sigma_min) checked against tau = 1e-9 max(1, ||Phi||_F).
struct Certificate {
  enum class Status { verified, failed };

  int n = 0;
  ObstructionParams params;
  Rational a;
  Rational b;
  Rational x0;
  long long S = 0;
  bool reduced_range = false;
  std::vector<long long> groups;                  // column groups s_t, t = 0..S-1
  std::vector<cplx> K;                            // group constants, t = 0..S-1
  std::vector<std::vector<cplx>> kernel_vectors;  // v_{s_t} - v_{s_0}, t = 1..S-1
  std::vector<double> unit_residuals;             // ||Phi v_s - delta_0||_2
  std::vector<double> kernel_residuals;           // ||Phi (v_s - v_0)||_2
  double residual_max = 0.0;
  double sigma_min = 0.0;
  double frobenius = 0.0;
  double tau = 0.0;
  long long kernel_dim = 0;   // witnessed: S - 1
  long long rank_bound = 0;   // p - 1
  Status status = Status::failed;
  std::string reason;

  bool verified() const { return status == Status::verified; }
};

Certificate build_certificate(int n, const ObstructionParams& params, const Rational& b);

// (a, b) lies on no segment of H: every factorization q = r*mu examined.
struct NotInH {
  Rational a;
  Rational b;
  Rational ab;
  std::vector<std::pair<long long, long long>> factorizations;  // (r, mu) pairs tried
  std::string detail;
};

using CertifyOutcome = std::variant<Certificate, NotInH>;

// Searches the factorizations q = r*mu (r >= 2, mu >= 3) of the reduced
// density for a segment containing b, then delegates to build_certificate.
CertifyOutcome certify_nonframe(int n, const Rational& a, const Rational& b);

// Single-record key = value serialization. Rational fields are exact;
// K_s components carry 17 significant digits, other floats shortest
// round-trip form.
std::string to_record(const Certificate& cert);

}  // namespace gobs
