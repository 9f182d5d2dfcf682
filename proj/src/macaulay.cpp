#include "totpos/macaulay.hpp"

#include <set>
#include <string>

namespace totpos {

Integer MacaulayExpansion::value() const {
  Integer sum(0);
  for (const auto& term : terms) sum += binomial(term.top, term.index);
  return sum;
}

namespace {

// Largest a >= t with C(a, t) <= bound. Requires bound >= 1.
Integer largest_top(const Integer& bound, int t) {
  if (t == 1) return bound;
  Integer lo(t);
  Integer step(1);
  Integer hi = lo + step;
  while (binomial(hi, t) <= bound) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // C(lo, t) <= bound < C(hi, t)
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binomial(mid, t) <= bound) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MacaulayExpansion macaulay_expand(const Integer& value, int k) {
  if (k < 1) throw std::domain_error("macaulay_expand: k must be >= 1");
  if (value < 0) throw std::domain_error("macaulay_expand: negative value");
  MacaulayExpansion expansion{k, {}};
  Integer remainder = value;
  for (int t = k; t >= 1 && remainder > 0; --t) {
    Integer top = largest_top(remainder, t);
    remainder -= binomial(top, t);
    expansion.terms.push_back({std::move(top), t});
  }
  return expansion;
}

Integer boundary(const Integer& value, int k) {
  Integer result(0);
  for (const auto& term : macaulay_expand(value, k).terms) {
    result += binomial(term.top - 1, term.index - 1);
  }
  return result;
}

MSequenceVerdict is_m_sequence(std::span<const Integer> seq) {
  if (seq.empty()) throw std::invalid_argument("is_m_sequence: empty sequence");
  for (const auto& v : seq) {
    if (v < 0) throw std::invalid_argument("is_m_sequence: negative entry " + v.str());
  }
  if (seq[0] != 1) {
    return {false, MSequenceWitness{0, std::nullopt, seq[0]}};
  }
  for (std::size_t k = 1; k < seq.size(); ++k) {
    Integer shadow = boundary(seq[k], static_cast<int>(k));
    if (shadow > seq[k - 1]) {
      return {false, MSequenceWitness{k, std::move(shadow), seq[k - 1]}};
    }
  }
  return {true, std::nullopt};
}

namespace {

// A monomial of degree k is its nondecreasing list of variable indices.
using Monomial = std::vector<int>;

constexpr long kOracleNodeBudget = 50'000'000;

class MulticomplexSearch {
 public:
  MulticomplexSearch(std::vector<long> counts, int vars)
      : counts_(std::move(counts)), vars_(vars) {}

  bool run() {
    std::set<Monomial> linear;
    for (int v = 0; v < vars_; ++v) linear.insert(Monomial{v});
    return extend(2, linear);
  }

 private:
  // Degree-k monomials all of whose degree-(k-1) divisors lie in `below`.
  std::vector<Monomial> candidates(const std::set<Monomial>& below) const {
    std::set<Monomial> found;
    for (const auto& m : below) {
      for (int v = m.back(); v < vars_; ++v) {
        Monomial up = m;
        up.push_back(v);
        bool closed = true;
        for (std::size_t drop = 0; drop < up.size() && closed; ++drop) {
          if (drop > 0 && up[drop] == up[drop - 1]) continue;
          Monomial divisor;
          divisor.reserve(up.size() - 1);
          for (std::size_t t = 0; t < up.size(); ++t) {
            if (t != drop) divisor.push_back(up[t]);
          }
          closed = below.contains(divisor);
        }
        if (closed) found.insert(std::move(up));
      }
    }
    return {found.begin(), found.end()};
  }

  bool extend(std::size_t degree, const std::set<Monomial>& below) {
    if (degree >= counts_.size()) return true;
    if (++nodes_ > kOracleNodeBudget) {
      throw OracleInfeasible("multicomplex oracle exceeded its search budget");
    }
    const auto need = static_cast<std::size_t>(counts_[degree]);
    if (need == 0) {
      for (std::size_t t = degree + 1; t < counts_.size(); ++t) {
        if (counts_[t] != 0) return false;
      }
      return true;
    }
    // Every monomial of degree k has a divisor of degree k-1 (k >= 2 here).
    if (below.empty()) return false;
    const auto pool = candidates(below);
    if (pool.size() < need) return false;
    // At the top degree nothing sits above, so any subset of the pool works.
    if (degree + 1 == counts_.size()) return true;

    std::vector<std::size_t> pick(need);
    for (std::size_t t = 0; t < need; ++t) pick[t] = t;
    while (true) {
      std::set<Monomial> chosen;
      for (auto idx : pick) chosen.insert(pool[idx]);
      if (extend(degree + 1, chosen)) return true;
      // next combination in lexicographic order
      std::size_t pos = need;
      while (pos > 0 && pick[pos - 1] == pool.size() - need + pos - 1) --pos;
      if (pos == 0) return false;
      ++pick[pos - 1];
      for (std::size_t t = pos; t < need; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  std::vector<long> counts_;
  int vars_;
  long nodes_ = 0;
};

}  // namespace

bool oracle_is_m_sequence(std::span<const Integer> seq, int max_vars) {
  if (seq.empty()) throw std::invalid_argument("oracle_is_m_sequence: empty sequence");
  if (max_vars < 0) throw std::invalid_argument("oracle_is_m_sequence: negative max_vars");
  Integer total(0);
  for (const auto& v : seq) {
    if (v < 0) throw std::invalid_argument("oracle_is_m_sequence: negative entry " + v.str());
    total += v;
  }
  if (total > kOracleMaxTotal) {
    throw OracleInfeasible("multicomplex oracle budget: entry sum " + total.str() +
                           " exceeds " + std::to_string(kOracleMaxTotal));
  }
  std::vector<long> counts;
  for (const auto& v : seq) counts.push_back(v.convert_to<long>());

  // The monomial 1 divides everything, so a nonempty multicomplex has n_0 = 1.
  if (counts[0] != 1) return false;
  if (counts.size() == 1) return true;
  // Degree-1 monomials are exactly the variables in use; relabel them 0..n_1-1.
  if (counts[1] > max_vars) return false;
  const int vars = static_cast<int>(counts[1]);
  return MulticomplexSearch(std::move(counts), vars).run();
}

}  // namespace totpos
