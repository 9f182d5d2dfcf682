#pragma once

#include <optional>
#include <string_view>

#include "totpos/exact.hpp"
#include "totpos/macaulay.hpp"

namespace totpos {

/// Face numbers (f_0, ..., f_{d-1}) of a simplicial d-polytope. The
/// conventional f_{-1} = f_d = 1 are implied, never stored.
class FVector {
 public:
  /// Throws std::domain_error unless d >= 1, counts has length d and every
  /// entry is >= 1.
  FVector(int d, IntegerRowVector counts);

  int dimension() const { return d_; }
  const IntegerRowVector& counts() const { return counts_; }
  /// (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1.
  IntegerRowVector augmented() const;

  friend bool operator==(const FVector& a, const FVector& b) {
    return a.d_ == b.d_ && a.counts_ == b.counts_;
  }

 private:
  int d_;
  IntegerRowVector counts_;
};

struct HVector {
  int d = 0;
  IntegerRowVector values;  // h_0 .. h_d
};

struct GVector {
  int d = 0;
  IntegerRowVector values;  // g_0 .. g_{floor(d/2)}

  friend bool operator==(const GVector& a, const GVector& b) {
    return a.d == b.d && a.values.size() == b.values.size() && a.values == b.values;
  }
};

/// Throws std::domain_error if values has the wrong length for d.
GVector make_g_vector(int d, IntegerRowVector values);

HVector f_to_h(const FVector& f);
GVector h_to_g(const HVector& h);
GVector f_to_g(const FVector& f);

/// g * M_d. Throws std::domain_error when some resulting face number is
/// not positive.
FVector g_to_f(const GVector& g);

/// g * W_{d+1} = (f_{-1}, f_0, ..., f_{d-1}); the leading entry equals g_0.
IntegerRowVector g_to_f_augmented(const GVector& g);

/// Euler-Poincare relation with f_{-1} = f_d = 1.
bool euler_check(const FVector& f);

enum class FeasibilityCondition { euler, g0, nonnegative, m_sequence };

std::string_view to_string(FeasibilityCondition c);

struct FeasibilityVerdict {
  bool pass = false;
  GVector g;
  Integer vertices;         // n = f_0
  bool g1_matches = false;  // g_1 == n - d - 1 (vacuous when d < 2)
  std::optional<FeasibilityCondition> failed;
  std::optional<MSequenceWitness> witness;  // set when failed == m_sequence
};

/// Checks, in order: Euler-Poincare, g_0 = 1, g_k >= 0, and the M-sequence
/// condition on g; stops at the first failure.
FeasibilityVerdict is_polytopal_f(const FVector& f);

}  // namespace totpos
