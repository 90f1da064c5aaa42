#pragma once
// Formal-divisor bookkeeping over an abstract point model: the points form
// the free abelian group Z^2, and the distinguished translation acts as
// adding xi = (0, 1). Everything here depends only on that group structure.

#include <compare>
#include <map>

#include "curvemod/algebra.hpp"

namespace curvemod {

struct PointModel {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const PointModel&, const PointModel&) = default;
  friend auto operator<=>(const PointModel&, const PointModel&) = default;

  PointModel operator+(const PointModel& o) const { return {x + o.x, y + o.y}; }
  PointModel operator-(const PointModel& o) const { return {x - o.x, y - o.y}; }
  PointModel scaled(long long k) const { return {k * x, k * y}; }
};

inline constexpr PointModel kTranslation{0, 1};  // xi

// Finitely supported point -> multiplicity map; zero multiplicities are
// never stored. Multiplicities are signed (intermediate expressions subtract
// points); effectiveness is a predicate.
class FormalDivisor {
 public:
  using Support = std::map<PointModel, long long>;

  FormalDivisor() = default;
  explicit FormalDivisor(Support support);  // strips zeros

  const Support& support() const { return support_; }
  long long multiplicity(const PointModel& p) const;

  bool effective() const;          // all multiplicities > 0
  bool multiplicity_free() const;  // all multiplicities == 1

  FormalDivisor& add(const PointModel& p, long long mult);  // in place
  FormalDivisor operator+(const FormalDivisor& o) const;
  FormalDivisor operator-(const FormalDivisor& o) const;

  friend bool operator==(const FormalDivisor&, const FormalDivisor&) = default;

 private:
  Support support_;
};

// Sum of multiplicities.
long long degree(const FormalDivisor& d);

// Group-law sum: sum of multiplicity * point in Z^2.
PointModel group_sum(const FormalDivisor& d);

// Linear equivalence: equal degree and equal group sum.
bool lin_equiv(const FormalDivisor& d1, const FormalDivisor& d2);

// Translate every point by n * xi.
FormalDivisor sigma_shift(const FormalDivisor& d, long long n);

// A module's curve-side data: its class size epsilon and its divisor, tied
// to an algebra. Invariant: deg(div) = num_generators * epsilon.
struct CurveDescriptor {
  AlgebraParams params;
  long long epsilon = 0;
  FormalDivisor div;

  // Validates epsilon >= 1 and the degree invariant; throws InvalidArgument.
  static CurveDescriptor make(AlgebraParams params, long long epsilon,
                              FormalDivisor div);
};

// Short-exact-sequence additivity: epsilons and divisors add. Throws
// KindMismatch when the algebras differ.
CurveDescriptor exact_sequence_add(const CurveDescriptor& m1,
                                   const CurveDescriptor& m2);

// Quotient by a point module: the divisor loses one copy of p and gains its
// translate by -central_degree * xi; epsilon and degree are unchanged.
// Throws PointNotInSupport unless p has multiplicity >= 1 in m.div.
CurveDescriptor point_quotient(const CurveDescriptor& m, const PointModel& p);

// Dimension of the degree-n section space cut out by a degree-deg_D divisor:
// exactly num_generators * n - deg_D below the boundary, and only the bound
// "at most one" at it. Throws DegreeTooLarge past the boundary.
struct SectionDim {
  bool exact = true;   // false = "at most one"
  long long dim = 0;   // meaningful only when exact
};
SectionDim section_space_dim(const AlgebraParams& params, long long n,
                             long long deg_D);

}  // namespace curvemod
