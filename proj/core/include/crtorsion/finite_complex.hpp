#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crtorsion {

/// A finite cochain complex 0 -> E_0 -> ... -> E_m -> 0 with real
/// differentials d_k of shape dims[k+1] x dims[k], d_{k+1} d_k = 0.
/// Inner products are the standard ones in the given bases. An optional
/// designated middle degree n (requires m = 2n+1) selects the weighting
/// where the middle differential counts as second order.
struct FiniteComplex {
  std::vector<long long> dims;            // N_0 .. N_m
  std::vector<Eigen::MatrixXd> d;         // d[k]: dims[k+1] x dims[k]
  std::optional<int> middle;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

enum class WeightScheme { kDeRham, kContact };

/// Checks shapes and d.d = 0 (Frobenius norm <= 1e-12 relative to scale).
/// Returns violation descriptions; empty means valid.
std::vector<std::string> validate(const FiniteComplex& c);

/// Deterministic random complex with the requested dimensions and, when
/// given, exact cohomology dimensions per degree (default: maximal ranks).
/// Differentials are built from random orthonormal factors with singular
/// values in [0.1, 10], each d_k supported on the orthogonal complement of
/// the image of d_{k-1}. Infeasible rank requests throw.
FiniteComplex random_complex(std::uint64_t seed,
                             const std::vector<long long>& dims,
                             const std::optional<std::vector<long long>>& cohomology = {});

/// dim H^k per degree via SVD ranks.
std::vector<long long> cohomology_dims(const FiniteComplex& c);

/// Canonical determinant-line torsion: with orthonormal generators s_k of
/// the coexact complements, tau = prod_k (|s_k| / |d s_k|)^{(-1)^k}, i.e.
/// the alternating product of the nonzero singular values of the d_k.
double torsion_canonical(const FiniteComplex& c);

/// Torsion as a weighted product of modified determinants of Laplacians:
///  - kDeRham: Delta_k = d delta + delta d, tau = prod det'(Delta_k)^{(-1)^k k/2}
///    (the metric-ratio torsion, inverse of the classical R-torsion);
///  - kContact: Delta = (d delta + delta d)^2 off middle degrees,
///    (d delta)^2 + D*D at n and D D* + (delta d)^2 at n+1 where D is the
///    middle differential, tau = prod det'(Delta_k)^{(-1)^k w(k)/4} with
///    w(k) = k for k <= n and k+1 above.
double torsion_via_laplacians(const FiniteComplex& c, WeightScheme scheme);

/// The Laplacian of the given scheme in degree k (exposed for tests).
Eigen::MatrixXd laplacian(const FiniteComplex& c, WeightScheme scheme, int k);

/// JSON round-trip (dims, row-major matrices, optional middle degree) for
/// reproducible failure cases.
std::string to_json_string(const FiniteComplex& c);
FiniteComplex complex_from_json_string(const std::string& text);

}  // namespace crtorsion
