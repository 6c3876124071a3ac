#pragma once

// Finite-dimensional rational ordered vector spaces given by finitely
// generated positive cones. Exact arithmetic throughout.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ordsolid/order.hpp"

namespace ordsolid {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
/// Row-major; a map V -> W has cod.dim rows and dom.dim columns.
using RationalMatrix = std::vector<RationalVector>;

/// Fourier-Motzkin is used up to this many generators, exact simplex beyond.
inline constexpr std::size_t kEliminationCap = 12;

struct ConeSpace {
  std::size_t dim = 0;
  std::vector<RationalVector> generators;
  bool requires_pointed = false;
  bool requires_generating = false;
};

struct ConeMembership {
  bool member = false;
  RationalVector multipliers;  // nonnegative, sum of lambda_i g_i = v, when member
};

/// Exact feasibility of sum lambda_i g_i = v with lambda >= 0.
ConeMembership membership_fourier_motzkin(const std::vector<RationalVector>& generators, const RationalVector& v);
ConeMembership membership_simplex(const std::vector<RationalVector>& generators, const RationalVector& v);
/// Dispatches on the generator count; every positive answer is re-checked.
ConeMembership cone_member(const ConeSpace& c, const RationalVector& v);

std::size_t rank(const std::vector<RationalVector>& vectors, std::size_t dim);
/// Row-reduced basis of the span.
std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors, std::size_t dim);

/// Basis of C intersected with -C, spanned by the generators whose negation lies in C.
std::vector<RationalVector> lineality_space(const ConeSpace& c);
bool is_generating(const ConeSpace& c);
bool is_pointed(const ConeSpace& c);
/// Checks dimensions and the flags the space requires; throws InvalidStructure.
void validate_cone(const ConeSpace& c);

enum class FreeMode { positive_cone, pointwise };

/// Basis e_x for x in X. positive_cone: generators e_x and e_y - e_x for
/// x < y; pointwise: only e_y - e_x for x < y.
ConeSpace free_ovec(const FinitePoset& x, FreeMode mode);

struct PositiveLinearMap {
  RationalMatrix matrix;
  ConeSpace dom;
  ConeSpace cod;
};

RationalVector matvec(const RationalMatrix& m, const RationalVector& v);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scalar_matrix(std::size_t n, const Rational& s);
/// Image of every domain generator lies in the codomain cone.
bool is_positive(const PositiveLinearMap& f);

/// x <= y in X implies value[y] - value[x] in the cone of W.
bool is_monotone_into(const FinitePoset& x, const ConeSpace& w, const std::vector<RationalVector>& values);

struct LinearExtension {
  PositiveLinearMap map;  // columns are the values f(x)
  bool positive = false;
};
LinearExtension extend_linear(const std::vector<RationalVector>& values, const ConeSpace& fx, const ConeSpace& w);

/// (g - f)(gen) in the codomain cone for every domain generator.
bool hom_leq(const PositiveLinearMap& f, const PositiveLinearMap& g);

struct OVecCoinserter {
  ConeSpace object;
  PositiveLinearMap projection;
  std::vector<RationalVector> lineality;   // basis of U
  std::vector<RationalVector> combined;    // generators of C = PW + S
  RationalMatrix section;                  // W/U coordinates -> W, right inverse of the projection
};
/// W/U with cone the image of C, where S is generated by g(e) - f(e) over
/// the domain generators e and U = C intersected with -C.
OVecCoinserter coinserter_ovec(const PositiveLinearMap& f, const PositiveLinearMap& g);
/// h = h' . projection for the unique linear h' when h vanishes on U; h' is
/// returned only if it is positive.
std::optional<PositiveLinearMap> factor_through(const OVecCoinserter& c, const PositiveLinearMap& h);

struct CounterexampleReport {
  bool f_monotone = false, g_monotone = false;
  bool f_below_g_on_generators = false;  // f <= g pointwise on X
  bool f_positive = false, g_positive = false;
  bool hom_leq = true;
  Rational f_at_u, g_at_u;
  RationalVector u;
  bool holds() const {
    return f_monotone && g_monotone && f_below_g_on_generators && f_positive && g_positive && !hom_leq &&
           f_at_u > g_at_u;
  }
};
/// Pointwise free space on the 2-chain a < b with f = (0, 2), g = (2, 3):
/// f <= g on X while f#(b - a) = 2 exceeds g#(b - a) = 1.
CounterexampleReport check_free_unit_counterexample();

struct InserterFailureReport {
  std::size_t equalizer_dim = 1;
  bool pos_inserter_is_full_cone = false;
  bool preserves_inserters = true;
  bool order_faithful = false;
  bool holds() const { return equalizer_dim == 0 && pos_inserter_is_full_cone && !preserves_inserters && order_faithful; }
};
/// On (Q, Q>=0) with r = id and s = 2 id: the equalizer is {0} while the
/// inserter of the underlying monotone maps is the whole half-line.
InserterFailureReport check_inserter_failure();

std::string to_string(const RationalVector& v);

}  // namespace ordsolid
