#include "lomean/order.hpp"

#include <algorithm>

#include "lomean/spectral.hpp"

namespace lomean {

double TolerancePolicy::effective(double scale) const {
  return std::max(abs_floor, rel * scale);
}

double TolerancePolicy::effective(std::initializer_list<double> scales) const {
  double s = 0.0;
  for (double v : scales) s = std::max(s, v);
  return effective(s);
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LE: return "LE";
    case Relation::GE: return "GE";
    case Relation::EQ: return "EQ";
    case Relation::INCOMPARABLE: return "INCOMPARABLE";
  }
  return "?";
}

OrderVerdict loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b,
                             const TolerancePolicy& pol) {
  require_same_dim(a, b, "loewner_compare");
  const double tol = pol.effective({spectral_norm(a), spectral_norm(b)});

  const auto sd = spectral_decompose(b - a);
  OrderVerdict v;
  v.witness_min_eig_BmA = sd.eigenvalues.front();
  v.witness_min_eig_AmB = -sd.eigenvalues.back();
  v.tol_used = tol;

  const bool le = v.witness_min_eig_BmA >= -tol;
  const bool ge = v.witness_min_eig_AmB >= -tol;
  v.relation = le && ge ? Relation::EQ
             : le       ? Relation::LE
             : ge       ? Relation::GE
                        : Relation::INCOMPARABLE;
  return v;
}

bool is_psd(const HermitianMatrix& a, const TolerancePolicy& pol) {
  return min_eigenvalue(a) >= -pol.effective(spectral_norm(a));
}

}  // namespace lomean
