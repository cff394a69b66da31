#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "thin4/integer_matrix.hpp"

namespace thin4 {

// Algebraic shadow of a 2-handle: framing, pairwise linking numbers with the
// other 2-handles, and signed run-through counts over the 1-handles. No
// planar diagram is kept; handle slides appear only through their effect on
// these integers.
struct TwoHandle {
  std::string id;
  long long framing = 0;
  std::map<std::string, long long> linking;      // other 2-handle id -> lk
  std::map<std::string, long long> run_through;  // 1-handle id -> count
};

struct KirbyDiagram {
  long long zero_handles = 1;
  std::vector<std::string> one_handles;  // ids
  std::vector<TwoHandle> two_handles;
  long long three_handles = 0;
  long long four_handles = 0;
};

// Checks id uniqueness, reference validity, linking symmetry, counts.
void validate(const KirbyDiagram& d);

long long euler_characteristic(const KirbyDiagram& d);

// Boundary map Z^{2-handles} -> Z^{1-handles} of run-through counts.
IntegerMatrix run_through_matrix(const KirbyDiagram& d);

// Framings on the diagonal, linking numbers off it.
IntegerMatrix linking_matrix(const KirbyDiagram& d);

struct HandlebodyHomology {
  AbelianGroup h0, h1, h2;
};

// Homology of a diagram with only 0-, 1- and 2-handles (one 0-handle).
HandlebodyHomology homology_of_2handlebody(const KirbyDiagram& d);

// First homology of the boundary of a 1-handle-free trace of surgery:
// cokernel of the full linking matrix.
AbelianGroup boundary_first_homology(const KirbyDiagram& d);

struct IntersectionForm {
  IntegerMatrix matrix;
  long long signature = 0;
  mpz_class det;
  bool even = false;  // diagonal parity in the given basis
};

// Requires no 1-handles. Signature by exact symmetric reduction over the
// rationals; determinant by exact elimination.
IntersectionForm intersection_form(const KirbyDiagram& d);

// Signature of a symmetric integer matrix, exact over mpq.
long long symmetric_signature(const IntegerMatrix& s);

// Chain of unknots, consecutive linking 1, given framings.
KirbyDiagram linear_plumbing(std::span<const long long> framings);

// Disk bundle of euler number n over the closed genus-g surface. The
// orientable model runs a single 2-handle over 2g one-handles with algebraic
// count zero; the nonorientable model runs it twice over each of g
// one-handles. Convention: the framing field carries n in both cases.
KirbyDiagram disk_bundle(bool orientable, long long g, long long n);

// Double along the boundary: a 0-framed meridian for every 2-handle, then
// one 3-handle per 1-handle and a single 4-handle. Requires a diagram with
// one 0-handle, no 3-/4-handles, and connected boundary (caller-asserted).
KirbyDiagram doubled(const KirbyDiagram& d);

}  // namespace thin4
