#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixlink/homogeneity.hpp"
#include "mixlink/mixed_poly.hpp"

namespace mixlink {

/// A point nu + mu of the radial support with the (nu, mu) splits mapping to it.
struct SupportPoint {
  ExponentVector point;
  std::vector<Monomial> witnesses;
};

std::vector<SupportPoint> radial_support(const MixedPolynomial& p);

enum class FaceType { StronglyPolarPositive, PolarPositive, Neither };

std::string to_string(FaceType t);

struct Face {
  WeightVector normal;        // primitive, strictly positive
  std::size_t dimension = 0;  // affine dimension of the minimizing support set
  long radial_degree = 0;     // min over terms of the radial P-degree
  MixedPolynomial face_poly;  // f_P
  FaceType classification = FaceType::Neither;
  /// Polar weight P' witnessing PolarPositive (equal to `normal` for
  /// StronglyPolarPositive), with its polar degree.
  std::optional<WeightedDegree> polar_witness;
};

struct ConvenienceReport {
  bool convenient = false;
  std::vector<std::size_t> missing_axes;  // 0-based
  /// For each axis present, one pure-power monomial touching only that axis.
  std::vector<std::pair<std::size_t, Monomial>> witnesses;
};

/// Terms of p minimizing the radial P-degree. Throws DegenerateInputError on
/// the zero polynomial and std::invalid_argument unless P > 0.
MixedPolynomial face_function(const MixedPolynomial& p, const WeightVector& weights);

ConvenienceReport is_convenient(const MixedPolynomial& p);

/// All faces Delta(P) of dimension n - 1 with strictly positive normal P,
/// unclassified. Normals are generated from n-subsets of support points and
/// validated, O(|support|^n). Throws NotConvenientError for non-convenient p.
std::vector<Face> top_faces(const MixedPolynomial& p);

struct SubfaceCheck {
  WeightVector weights;
  FaceType inherited = FaceType::Neither;
  bool consistent = true;
};

struct NewtonBoundaryReport {
  bool convenient = false;
  std::vector<Face> top_faces;
  FaceType overall = FaceType::Neither;
  /// Random positive weights whose face functions were re-checked against
  /// the overall label.
  std::vector<SubfaceCheck> subface_checks;
  bool subface_property_holds = true;
};

/// Classifies every top face and the polynomial. Throws NotConvenientError.
NewtonBoundaryReport classify_face_type(const MixedPolynomial& p, std::size_t subface_samples = 20,
                                        std::uint64_t seed = 1);

/// Result of the randomized mixed-criticality probe on the face functions.
struct FaceProbe {
  WeightVector normal;
  std::size_t converged = 0;
  std::size_t failed = 0;
  double min_residual = 1.0;
  std::optional<ComplexVector> witness;  // point attaining min_residual
};

struct NondegeneracyReport {
  std::vector<FaceProbe> faces;
  std::size_t trials = 0;
  double tol = 0.0;
  double min_residual = 1.0;
  bool witness_found = false;  // some residual < tol: suspected degeneracy
  std::string note = "non-degeneracy: probed, not proven";
};

/// For each top face f_P, solves f_P = 0 on (C*)^n from random seeds by
/// Gauss-Newton and evaluates the normalized criticality residual
///   min_{|u|=1} ||conj(grad_d f_P) - u grad_dbar f_P|| / scale,
/// scale being the absolute-value bound of the gradient.
NondegeneracyReport nondegeneracy_probe(const MixedPolynomial& p, std::size_t trials, double tol = 1e-6,
                                        std::uint64_t seed = 1);

/// The criticality residual at one point (used by the probe; exposed for tests).
double criticality_residual(const MixedPolynomial& f, ComplexSpan z);

}  // namespace mixlink
