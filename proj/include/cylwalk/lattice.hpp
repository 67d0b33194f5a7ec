#pragma once

#include <cstdint>
#include <vector>

#include "cylwalk/laurent.hpp"

namespace cylwalk {

/// A validated instance: r walkers on the M-cylinder, path length N, start
/// abscissas a and end abscissas e (both strictly increasing in [0, M)).
struct CylinderConfig {
  int M = 2;
  int N = 0;
  std::vector<int> a;
  std::vector<int> e;

  int r() const { return static_cast<int>(a.size()); }
};

/// Throws Error with NotStrictlyIncreasing, OutOfRange, ParityViolation,
/// BadDimensions or BadCylinder. Inputs are never reordered.
CylinderConfig validate_config(int M, int N, std::vector<int> a, std::vector<int> e);

/// Counter-clockwise moves one unit right with weight 1; clockwise moves one
/// unit left with weight x.
enum class Step : std::uint8_t { CounterClockwise = 0, Clockwise = 1 };

struct WalkerFamily {
  std::uint64_t index = 0;             // bit pattern the family was decoded from
  std::vector<std::vector<Step>> steps;  // r rows of N steps
  std::vector<int> offsets;            // winding offset o_i of each path
  std::vector<int> left_counts;        // clockwise steps k_i of each path
  int shift = 0;                       // path i ends at endpoint label i + shift
  int sign = 1;                        // sign of the cyclic permutation mu^shift
  bool lift_consistent = true;         // see FamilySignature

  int total_offset() const;
  int total_left() const;
};

/// Lifted endpoint of each path: a_i + (#right - #left).
std::vector<int> lifted_endpoints(const WalkerFamily& family, const CylinderConfig& config);

/// Endpoint label of e_j + s*M is j + s*r (1-based j). Path i ends at label
/// i + shift when the lifted endpoints are a common shift of the labels,
/// which always holds on even cylinders. On odd cylinders, paths of opposite
/// parity can cross between lattice points, the label shifts can disagree,
/// and then lift_consistent is false and shift is the cycle power in [0, r).
struct FamilySignature {
  int shift = 0;
  int sign = 1;
  bool lift_consistent = true;
  std::vector<int> offsets;

  /// shift reduced to [0, r).
  int shift_mod(int r) const { return ((shift % r) + r) % r; }
};

/// Recovers the endpoint assignment, its sign, and the per-path offsets from
/// the lifted endpoints. Throws Error(NotCyclic) if the assignment of end
/// abscissas is not a power of the full cycle (1 2 ... r).
FamilySignature family_signature(const WalkerFamily& family, const CylinderConfig& config);

/// Sign of the permutation (1 2 ... r)^p.
int cyclic_sign(int r, int p);

/// Decodes bit pattern `index` into r rows of N steps. Step s of path i is
/// bit (r*N - 1 - (i*N + s)), so increasing indices run in lexicographic
/// order of the step tuple.
std::vector<std::vector<Step>> decode_steps(std::uint64_t index, int r, int N);

struct EnumerationOptions {
  int max_total_steps = 26;  // cap on r*N
  unsigned workers = 1;      // 0 picks std::thread::hardware_concurrency()
  bool keep_families = true;
};

struct FamilyEnumeration {
  std::vector<WalkerFamily> families;  // in increasing index order
  std::uint64_t family_count = 0;
  LaurentPoly2 signed_gf;    // sum of sign * x^(sum k) * y^(sum o)
  LaurentPoly2 unsigned_gf;  // sum of x^(sum k) * y^(sum o)
};

/// Exhaustive search over all 2^(r*N) step tuples. Keeps the tuples whose
/// paths are vertex-disjoint on the cylinder at every level and whose end
/// abscissas are exactly {e_j}. Throws Error(CapExceeded) above the cap.
FamilyEnumeration enumerate_families(const CylinderConfig& config, const EnumerationOptions& options = {});

}  // namespace cylwalk
