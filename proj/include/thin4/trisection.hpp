#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thin4/integer_matrix.hpp"

namespace thin4 {

// Curves live in H1 of the model genus-g surface with the fixed symplectic
// basis a_1..a_g, b_1..b_g (a_i . b_i = 1); class vectors interleave the
// coordinates as (a_1, b_1, a_2, b_2, ...).
struct Curve {
  std::vector<long long> cls;  // length 2g
  std::string label;

  bool operator==(const Curve& o) const { return cls == o.cls; }
};

struct CutSystem {
  std::vector<Curve> curves;  // exactly g for a valid system

  bool operator==(const CutSystem&) const = default;
};

// Homology-level trisection data. Curves are classes, not isotopy classes:
// every verdict below is a necessary condition, never a proof.
struct TrisectionDiagram {
  long long genus = 0;
  CutSystem alpha, beta, gamma;
  std::optional<IntegerMatrix> geom_ab, geom_bg, geom_ga;
  std::optional<std::array<long long, 3>> declared_k;
};

// Pairing against the standard skew form J (a_i . b_i = 1).
mpz_class symplectic_pairing(const std::vector<long long>& x,
                             const std::vector<long long>& y);

// Count = genus, primitive classes, pairwise J-orthogonal, and the class
// matrix spans a rank-g direct summand (SNF all ones). Failures are returned,
// not thrown.
std::vector<std::string> validate_cut_system(const CutSystem& s, long long genus);

// The g x g pairing matrix J(s1_i, s2_j).
IntegerMatrix pairing_matrix(const CutSystem& s1, const CutSystem& s2,
                             long long genus);

// Necessary-condition k for the two handlebodies to glue to #_k S^1 x S^2:
// the pairing cokernel must be free, and k is its rank. Throws
// std::invalid_argument on invalid systems or a torsion obstruction.
long long pairwise_k(const CutSystem& s1, const CutSystem& s2, long long genus);

struct TrisectionReport {
  long long genus = 0;
  std::optional<long long> k12, k23, k31;
  std::optional<long long> euler;  // 2 + g - (k12 + k23 + k31)
  long long width_entry = 0;       // max(2g - 1, 0)
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;

  bool ok() const { return diagnostics.empty(); }
};

TrisectionReport validate_trisection(const TrisectionDiagram& d);

struct StandardPositionResult {
  bool ok = false;
  std::vector<std::string> dual_link;  // labels of the extracted curves
  std::vector<std::string> diagnostics;
};

// Checks the dual standard position against gamma/alpha: the first k curves
// agree as classes and the remaining geometric intersections form an
// identity block. Requires the gamma/alpha geometric matrix.
StandardPositionResult standard_position_check(const TrisectionDiagram& d,
                                               long long k);

// Block sum; genus and k-values add, euler adds minus 2.
TrisectionDiagram connected_sum(const TrisectionDiagram& d1,
                                const TrisectionDiagram& d2);

// The standard small diagrams.
TrisectionDiagram s4_diagram();
TrisectionDiagram s1xs3_diagram();
TrisectionDiagram cp2_diagram(bool positive);

// Sphere bundle over the closed genus-g surface as a double of the disk
// bundle of euler number n: genus 2g+2 (orientable) or g+2 (nonorientable).
// The class data follows the tunnel pattern of the one-2-handle bundle
// diagrams; the three k-values come out equal (2g,2g,2g) resp. (g,g,g).
TrisectionDiagram sphere_bundle_double_diagram(bool orientable, long long g,
                                               long long n);

struct SymmetryReport {
  bool ok = false;
  bool necessary_only = true;
  std::vector<std::string> diagnostics;
};

// Necessary conditions for a finite-order surface symmetry of period p to
// respect the diagram at homology level: the action preserves J up to sign,
// has M^p = +-I, and maps each cut system's span onto itself.
SymmetryReport check_symmetry_action(const TrisectionDiagram& d,
                                     const IntegerMatrix& action,
                                     long long period);

}  // namespace thin4
