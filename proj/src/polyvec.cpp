#include "totpos/polyvec.hpp"

#include <string>
#include <vector>

#include "totpos/transfer.hpp"

namespace totpos {

FVector::FVector(int d, IntegerRowVector counts) : d_(d), counts_(std::move(counts)) {
  if (d_ < 1) throw std::domain_error("f-vector needs d >= 1");
  if (counts_.size() != d_) {
    throw std::domain_error("f-vector for d=" + std::to_string(d_) + " needs " +
                            std::to_string(d_) + " entries, got " +
                            std::to_string(counts_.size()));
  }
  for (Eigen::Index j = 0; j < counts_.size(); ++j) {
    if (counts_(j) < 1) {
      throw std::domain_error("f-vector entry f_" + std::to_string(j) + " = " +
                              counts_(j).str() + " is not positive");
    }
  }
}

IntegerRowVector FVector::augmented() const {
  IntegerRowVector out(d_ + 1);
  out(0) = 1;
  out.tail(d_) = counts_;
  return out;
}

GVector make_g_vector(int d, IntegerRowVector values) {
  if (d < 1) throw std::domain_error("g-vector needs d >= 1");
  const int expected = d / 2 + 1;
  if (values.size() != expected) {
    throw std::domain_error("g-vector for d=" + std::to_string(d) + " needs " +
                            std::to_string(expected) + " entries, got " +
                            std::to_string(values.size()));
  }
  return GVector{d, std::move(values)};
}

HVector f_to_h(const FVector& f) {
  const int d = f.dimension();
  // h_i = sum_j (-1)^(i+j) C(d-j, i-j) f_{j-1}, as a row vector times a
  // unit upper-triangular change of basis.
  IntegerMatrix basis = IntegerMatrix::Zero(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    for (int i = j; i <= d; ++i) {
      Integer c = binomial(d - j, i - j);
      basis(j, i) = (i + j) % 2 == 0 ? c : Integer(-c);
    }
  }
  return HVector{d, f.augmented() * basis};
}

GVector h_to_g(const HVector& h) {
  const int len = h.d / 2 + 1;
  IntegerRowVector g(len);
  g(0) = h.values(0);
  for (int k = 1; k < len; ++k) g(k) = h.values(k) - h.values(k - 1);
  return GVector{h.d, std::move(g)};
}

GVector f_to_g(const FVector& f) { return h_to_g(f_to_h(f)); }

FVector g_to_f(const GVector& g) {
  const GVector checked = make_g_vector(g.d, g.values);
  return FVector(g.d, checked.values * build_m(g.d).entries);
}

IntegerRowVector g_to_f_augmented(const GVector& g) {
  const GVector checked = make_g_vector(g.d, g.values);
  return checked.values * build_w(g.d + 1).entries;
}

bool euler_check(const FVector& f) {
  // sum_{j=-1}^{d} (-1)^j f_j with f_{-1} = f_d = 1
  const int d = f.dimension();
  Integer sum(-1);
  for (int j = 0; j < d; ++j) {
    if (j % 2 == 0) {
      sum += f.counts()(j);
    } else {
      sum -= f.counts()(j);
    }
  }
  sum += d % 2 == 0 ? 1 : -1;
  return sum == 0;
}

std::string_view to_string(FeasibilityCondition c) {
  switch (c) {
    case FeasibilityCondition::euler: return "euler";
    case FeasibilityCondition::g0: return "g0";
    case FeasibilityCondition::nonnegative: return "nonnegative";
    case FeasibilityCondition::m_sequence: return "m_sequence";
  }
  return "unknown";
}

FeasibilityVerdict is_polytopal_f(const FVector& f) {
  FeasibilityVerdict v;
  const int d = f.dimension();
  v.g = f_to_g(f);
  v.vertices = f.counts()(0);
  v.g1_matches = v.g.values.size() < 2 || v.g.values(1) == v.vertices - d - 1;

  if (!euler_check(f)) {
    v.failed = FeasibilityCondition::euler;
  } else if (v.g.values(0) != 1) {
    v.failed = FeasibilityCondition::g0;
  } else if ((v.g.values.array() < Integer(0)).any()) {
    v.failed = FeasibilityCondition::nonnegative;
  } else {
    const std::vector<Integer> seq(v.g.values.begin(), v.g.values.end());
    auto m = is_m_sequence(seq);
    if (!m) {
      v.failed = FeasibilityCondition::m_sequence;
      v.witness = std::move(m.witness);
    }
  }
  v.pass = !v.failed.has_value();
  return v;
}

}  // namespace totpos
