#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "totpos/exact.hpp"

namespace totpos {

/// One summand C(top, index) of a k-binomial expansion.
struct MacaulayTerm {
  Integer top;
  int index = 0;

  friend bool operator==(const MacaulayTerm&, const MacaulayTerm&) = default;
};

/// value = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_s, s) with
/// a_k > a_{k-1} > ... > a_s >= s >= 1, chosen greedily.
struct MacaulayExpansion {
  int k = 0;
  std::vector<MacaulayTerm> terms;

  Integer value() const;
};

/// Greedy k-binomial expansion. value == 0 gives the empty expansion.
/// Throws std::domain_error for negative value or k < 1.
MacaulayExpansion macaulay_expand(const Integer& value, int k);

/// k-boundary: each C(a, t) of the expansion becomes C(a-1, t-1).
Integer boundary(const Integer& value, int k);

/// Why a sequence failed. k == 0 means n_0 != 1 (no boundary involved);
/// otherwise boundary_value = d^k(n_k) exceeded previous = n_{k-1}.
struct MSequenceWitness {
  std::size_t k = 0;
  std::optional<Integer> boundary_value;
  Integer previous;
};

struct MSequenceVerdict {
  bool is_m_sequence = false;
  std::optional<MSequenceWitness> witness;

  explicit operator bool() const { return is_m_sequence; }
};

/// n_0 == 1 and d^k(n_k) <= n_{k-1} for every k >= 1. Reports the first
/// violation. Throws std::invalid_argument for an empty or negative sequence.
MSequenceVerdict is_m_sequence(std::span<const Integer> seq);

class OracleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest entry sum the multicomplex oracle accepts.
inline constexpr long kOracleMaxTotal = 25;

/// Exhaustive search for a nonempty multicomplex (a set of monomials closed
/// under division) on at most max_vars variables whose degree-k monomial
/// count is seq[k]. Independent of the boundary operator; used to check it.
/// Throws OracleInfeasible when the entry sum exceeds kOracleMaxTotal or the
/// search would visit too many nodes.
bool oracle_is_m_sequence(std::span<const Integer> seq, int max_vars);

}  // namespace totpos
