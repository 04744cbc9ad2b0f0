#ifndef AT4KIT_SRG_HPP
#define AT4KIT_SRG_HPP

#include "at4kit/exactnum.hpp"

#include <array>
#include <string>
#include <vector>

namespace at4kit::srg {

/// Strongly regular parameter tuple (v, k, lambda, mu).
struct SrgParams {
  Integer v;
  Integer k;
  Integer lambda;
  Integer mu;

  /// k(k - lambda - 1) = (v - k - 1) mu
  bool identity_holds() const;
  std::string to_string() const;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

enum class SpectrumKind { integral, conference, infeasible };

/// Spectrum k^1, theta_plus^m_plus, theta_minus^m_minus.
///
/// For the conference kind the eigenvalues are irrational: both theta fields
/// hold the common rational part (lambda - mu)/2 and the true eigenvalues are
/// theta +/- sqrt(radicand)/2. The radicand is zero for every other kind.
struct Spectrum {
  SpectrumKind kind = SpectrumKind::infeasible;
  Integer principal;
  Rational theta_plus;
  Rational theta_minus;
  Rational mult_plus;
  Rational mult_minus;
  Integer radicand;
  std::string reason;

  bool integral() const { return kind == SpectrumKind::integral; }
};

/// Rows are eigenspaces (trivial, theta_plus, theta_minus), columns are the
/// distance relations 0, 1, 2. Row 0 is all ones; column 0 holds the
/// eigenspace dimensions.
using EigenmatrixQ = std::array<std::array<Rational, 3>, 3>;

struct Verdict {
  bool pass = true;
  std::vector<std::string> reasons;
};

/// ((p+2)(p^2+4p+2), p(p+3), p-2, p); throws std::invalid_argument for p < 2.
SrgParams local_family_params(const Integer& p);

Spectrum srg_spectrum(const SrgParams& params);

EigenmatrixQ second_eigenmatrix(const Integer& p);

/// Largest clique size in the local family: (p+2)^2.
Integer clique_bound(const Integer& p);

/// floor(mu * v / (k - theta_plus)). Only defined for integral spectra;
/// throws std::invalid_argument otherwise.
Integer fixed_point_order_bound(const SrgParams& params);

Verdict feasibility_basic(const SrgParams& params);

/// Dimensions n1, n2 of the non-principal eigenspaces of the local family.
Integer family_mult_plus(const Integer& p);
Integer family_mult_minus(const Integer& p);

}  // namespace at4kit::srg

#endif  // AT4KIT_SRG_HPP
