#pragma once

#include <map>
#include <optional>

#include "sif/root_system.hpp"

namespace sif {

using WeightMult = std::map<Weight, long>;

// Laurent polynomial in q with weight-multiplicity coefficients; optionally
// truncated above a maximal q-degree.
class QCharacter {
 public:
  QCharacter() = default;
  explicit QCharacter(std::optional<int> truncation) : truncation_(truncation) {}

  static QCharacter unit(int rank);  // weight 0 at q^0

  const std::map<int, WeightMult>& terms() const { return terms_; }
  std::optional<int> truncation() const { return truncation_; }

  void add(int q, const Weight& w, long mult);
  QCharacter& operator+=(const QCharacter& o);
  QCharacter operator*(const QCharacter& o) const;
  // Multiply by 1/(q)_n = 1/prod_{i=1..n}(1-q^i); requires a truncation.
  QCharacter mul_pochhammer_inverse(int n) const;
  QCharacter truncated(int qmax) const;

  long graded_dim(int q) const;
  long dim_at_q1() const;
  long weight_mult(int q, const Weight& w) const;
  bool operator==(const QCharacter& o) const { return terms_ == o.terms_; }

 private:
  std::map<int, WeightMult> terms_;
  std::optional<int> truncation_;
};

// Coefficients of the Gaussian binomial [m choose k]_q, constant term first.
std::vector<long> gaussian_binomial(int m, int k);

}  // namespace sif
